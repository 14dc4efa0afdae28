#include "scv/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace scv {

namespace {

// Canonical factor order: mode descending, flavor ascending.
bool factor_before(const Factor& a, const Factor& b) {
    if (a.mode != b.mode) return a.mode > b.mode;
    return a.flavor < b.flavor;
}

GaussianRational* fault_epsilon() {
    static GaussianRational eps;
    return &eps;
}
bool* fault_flag() {
    static bool active = false;
    return &active;
}

}  // namespace

FockMonomial::FockMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (const Factor& f : factors_)
        if (f.mode < 1 || f.flavor < 1)
            throw std::invalid_argument("factor must have mode >= 1 and flavor >= 1");
    std::sort(factors_.begin(), factors_.end(), factor_before);
}

long FockMonomial::weight() const {
    long w = 0;
    for (const Factor& f : factors_) w += f.mode;
    return w;
}

long FockMonomial::max_flavor() const {
    long m = 0;
    for (const Factor& f : factors_) m = std::max(m, f.flavor);
    return m;
}

FockMonomial FockMonomial::with_factor(Factor f) const {
    std::vector<Factor> fs = factors_;
    fs.insert(std::upper_bound(fs.begin(), fs.end(), f, factor_before), f);
    FockMonomial m;
    m.factors_ = std::move(fs);
    if (f.mode < 1 || f.flavor < 1)
        throw std::invalid_argument("factor must have mode >= 1 and flavor >= 1");
    return m;
}

FockMonomial FockMonomial::without_index(std::size_t idx) const {
    std::vector<Factor> fs = factors_;
    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(idx));
    FockMonomial m;
    m.factors_ = std::move(fs);
    return m;
}

FockElement::FockElement(long rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

FockElement FockElement::vacuum(long rank) {
    FockElement v(rank);
    v.terms_[FockMonomial::vacuum()] = GaussianRational(1);
    return v;
}

FockElement FockElement::single(long rank, FockMonomial m, GaussianRational coeff) {
    FockElement v(rank);
    v.add_term(m, coeff);
    return v;
}

void FockElement::add_term(const FockMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (m.max_flavor() > rank_)
        throw std::invalid_argument("monomial flavor exceeds rank");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational FockElement::coeff(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

FockElement& FockElement::operator+=(const FockElement& o) {
    if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
    if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockElement& FockElement::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::optional<long> FockElement::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    long w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

bool FockElement::is_homogeneous_of_weight(long w) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

long FockElement::max_term_weight() const {
    long w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

FockElement apply_heisenberg(long flavor, long mode, const FockElement& v) {
    if (flavor < 1 || flavor > v.rank())
        throw std::invalid_argument("flavor out of range 1..rank");
    FockElement out(v.rank());
    if (mode == 0) return out;
    if (mode < 0) {
        Factor f{-mode, flavor};
        for (const auto& [m, c] : v.terms()) out.add_term(m.with_factor(f), c);
        return out;
    }
    // Annihilation: contract against every matching factor. The pairing is
    // the orthonormal one, so only equal flavors contribute, with constant
    // `mode` from [h_i(m), h_j(-m)] = m delta_ij.
    GaussianRational constant(mode);
    if (*fault_flag() && mode == 1 && flavor == 1) constant += *fault_epsilon();
    for (const auto& [m, c] : v.terms()) {
        const auto& fs = m.factors();
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (fs[k].mode != mode || fs[k].flavor != flavor) continue;
            out.add_term(m.without_index(k), c * constant);
        }
    }
    return out;
}

GradedBasis::GradedBasis(long rank, long degree, std::vector<FockMonomial> monomials)
    : rank_(rank), degree_(degree), monomials_(std::move(monomials)) {
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_[monomials_[k]] = k;
    if (index_.size() != monomials_.size())
        throw std::invalid_argument("duplicate monomial in graded basis");
}

std::size_t GradedBasis::index_of(const FockMonomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial not in basis");
    return it->second;
}

Vector GradedBasis::coordinates(const FockElement& v) const {
    Vector coords(size());
    for (const auto& [m, c] : v.terms()) coords[index_of(m)] = c;
    return coords;
}

FockElement GradedBasis::element_of(const Vector& coords) const {
    if (coords.size() != size()) throw std::invalid_argument("coordinate length mismatch");
    FockElement v(rank_);
    for (std::size_t k = 0; k < coords.size(); ++k) v.add_term(monomials_[k], coords[k]);
    return v;
}

namespace {

// Enumerate weight-n monomials: factor sequences canonical under
// (mode desc, flavor asc), i.e. each next factor is <= the previous one in
// that order.
void enumerate(long rank, long remaining, long max_mode, long min_flavor_at_max,
               std::vector<Factor>& acc, std::vector<FockMonomial>& out) {
    if (remaining == 0) {
        std::vector<Factor> fs = acc;
        out.emplace_back(std::move(fs));
        return;
    }
    for (long mode = std::min(remaining, max_mode); mode >= 1; --mode) {
        long fstart = (mode == max_mode) ? min_flavor_at_max : 1;
        for (long fl = fstart; fl <= rank; ++fl) {
            acc.push_back({mode, fl});
            enumerate(rank, remaining - mode, mode, fl, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

GradedBasis basis_of_degree(long rank, long degree) {
    if (rank < 1 || degree < 0) throw std::invalid_argument("need rank >= 1, degree >= 0");
    std::vector<FockMonomial> monomials;
    std::vector<Factor> acc;
    enumerate(rank, degree, degree == 0 ? 1 : degree, 1, acc, monomials);
    std::sort(monomials.begin(), monomials.end());
    return GradedBasis(rank, degree, std::move(monomials));
}

void set_heisenberg_fault(const GaussianRational& epsilon) {
    *fault_epsilon() = epsilon;
    *fault_flag() = true;
}

void clear_heisenberg_fault() {
    *fault_flag() = false;
    *fault_epsilon() = GaussianRational();
}

bool heisenberg_fault_active() { return *fault_flag(); }

}  // namespace scv
