#include "scv/modes.hpp"

#include <sstream>
#include <stdexcept>

namespace scv {

namespace {

// binom(x, k) for integer x (possibly negative), k >= 0, as an exact rational.
GaussianRational binom_int(long x, long k) {
    Rational num(1);
    for (long t = 0; t < k; ++t) num *= Rational(x - t);
    Rational den(1);
    for (long t = 2; t <= k; ++t) den *= Rational(t);
    return GaussianRational(num / den);
}

// Coefficient of h_i(j) in the derived field (1/(n-1)!) d^(n-1) h_i(z).
GaussianRational derived_coeff(long n, long j) {
    GaussianRational c = binom_int(j + n - 1, n - 1);
    if ((n - 1) % 2 != 0) c = -c;
    return c;
}

struct TupleContext {
    const std::vector<Factor>* factors = nullptr;
    const FockElement* target = nullptr;
    long max_j = 0;
    FockElement* out = nullptr;
};

void emit_tuple(const TupleContext& ctx, const std::vector<long>& js,
                const GaussianRational& coeff) {
    // Normal ordering: annihilation modes act first, creations afterwards.
    FockElement cur = *ctx.target;
    const auto& fs = *ctx.factors;
    for (std::size_t t = 0; t < js.size() && !cur.is_zero(); ++t)
        if (js[t] > 0) cur = apply_heisenberg(fs[t].flavor, js[t], cur);
    for (std::size_t t = 0; t < js.size() && !cur.is_zero(); ++t)
        if (js[t] < 0) cur = apply_heisenberg(fs[t].flavor, js[t], cur);
    if (cur.is_zero()) return;
    cur *= coeff;
    *ctx.out += cur;
}

void tuple_dfs(const TupleContext& ctx, std::size_t slot, long remaining,
               std::vector<long>& js, const GaussianRational& coeff) {
    const auto& fs = *ctx.factors;
    const std::size_t k = fs.size();
    if (slot + 1 == k) {
        long j = remaining;
        if (j == 0 || j > ctx.max_j) return;
        GaussianRational c = derived_coeff(fs[slot].mode, j);
        if (c.is_zero()) return;
        js[slot] = j;
        emit_tuple(ctx, js, coeff * c);
        return;
    }
    long slots_after = static_cast<long>(k - slot - 1);
    long lo = remaining - slots_after * ctx.max_j;
    for (long j = ctx.max_j; j >= lo; --j) {
        if (j == 0) continue;
        GaussianRational c = derived_coeff(fs[slot].mode, j);
        if (c.is_zero()) continue;
        js[slot] = j;
        tuple_dfs(ctx, slot + 1, remaining - j, js, coeff * c);
    }
}

FockElement monomial_mode(const FockMonomial& u, long m, const FockElement& w) {
    if (u.is_vacuum())
        return m == -1 ? w : FockElement::zero(w.rank());
    FockElement out(w.rank());
    if (w.is_zero()) return out;
    TupleContext ctx;
    ctx.factors = &u.factors();
    ctx.target = &w;
    ctx.max_j = w.max_term_weight();
    ctx.out = &out;
    long required = m + 1 - u.weight();
    std::vector<long> js(u.size(), 0);
    tuple_dfs(ctx, 0, required, js, GaussianRational(1));
    return out;
}

}  // namespace

FockElement vertex_mode(const FockElement& v, long m, const FockElement& w) {
    if (v.rank() != w.rank()) throw std::invalid_argument("rank mismatch in vertex_mode");
    FockElement out(w.rank());
    for (const auto& [u, cu] : v.terms()) {
        FockElement part = monomial_mode(u, m, w);
        part *= cu;
        out += part;
    }
    return out;
}

FockElement virasoro_mode(const FockElement& omega2, long n, const FockElement& w) {
    if (!omega2.is_homogeneous_of_weight(2))
        throw std::invalid_argument("Virasoro state must be homogeneous of weight 2");
    return vertex_mode(omega2, n + 1, w);
}

FockElement conformal_vector(long rank, const Vector& lambda) {
    if (static_cast<long>(lambda.size()) != rank)
        throw std::invalid_argument("lambda length must equal rank");
    FockElement omega(rank);
    GaussianRational half = rational_of(1, 2);
    for (long i = 1; i <= rank; ++i) {
        omega.add_term(FockMonomial({{1, i}, {1, i}}), half);
        if (!lambda[i - 1].is_zero()) omega.add_term(FockMonomial({{2, i}}), lambda[i - 1]);
    }
    return omega;
}

VirasoroFamily::VirasoroFamily(FockElement omega2) : omega_(std::move(omega2)) {
    if (!omega_.is_homogeneous_of_weight(2))
        throw std::invalid_argument("Virasoro state must be homogeneous of weight 2");
}

FockElement VirasoroFamily::apply(long n, const FockElement& w) const {
    FockElement out(omega_.rank());
    for (const auto& [mono, c] : w.terms()) {
        auto key = std::make_pair(n, mono);
        FockElement part = [&] {
            std::scoped_lock lock(memo_lock_);
            auto it = memo_.find(key);
            if (it == memo_.end()) {
                FockElement image =
                    vertex_mode(omega_, n + 1, FockElement::single(omega_.rank(), mono));
                it = memo_.emplace(std::move(key), std::move(image)).first;
            }
            return it->second;
        }();
        part *= c;
        out += part;
    }
    return out;
}

std::optional<GaussianRational> VirasoroFamily::central_charge() const {
    FockElement l2 = apply(2, omega_);
    for (const auto& [m, c] : l2.terms())
        if (!m.is_vacuum()) return std::nullopt;
    return GaussianRational(2) * l2.coeff(FockMonomial::vacuum());
}

BracketReport virasoro_bracket_check(const FockElement& omega2, long degree_bound,
                                     long mode_bound) {
    BracketReport rep;
    VirasoroFamily fam(omega2);
    auto c = fam.central_charge();
    if (!c) {
        rep.failure = "L'(2) applied to the state is not a multiple of the vacuum";
        return rep;
    }
    rep.central_charge = *c;
    const long d = omega2.rank();
    for (long k = 0; k <= degree_bound; ++k) {
        GradedBasis basis = basis_of_degree(d, k);
        for (long m = -mode_bound; m <= mode_bound; ++m) {
            for (long n = m + 1; n <= mode_bound; ++n) {
                GaussianRational anomaly;
                if (m + n == 0)
                    anomaly = GaussianRational(Rational(m) * m * m - m) * rational_of(1, 12) *
                              rep.central_charge;
                for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                    FockElement b = FockElement::single(d, basis.at(bi));
                    FockElement lhs = fam.apply(m, fam.apply(n, b)) - fam.apply(n, fam.apply(m, b));
                    FockElement rhs = GaussianRational(m - n) * fam.apply(m + n, b);
                    if (!anomaly.is_zero()) rhs += anomaly * b;
                    if (!(lhs == rhs)) {
                        std::ostringstream os;
                        os << "bracket mismatch at m=" << m << " n=" << n << " degree=" << k
                           << " basis index " << bi;
                        rep.failure = os.str();
                        return rep;
                    }
                }
            }
        }
    }
    rep.ok = true;
    return rep;
}

bool lh_commutator_check(const FockElement& h, const Vector& lambda, long degree_bound) {
    if (!h.is_homogeneous_of_weight(1))
        throw std::invalid_argument("state must be homogeneous of weight 1");
    const long d = h.rank();
    VirasoroFamily fam(conformal_vector(d, lambda));
    if (!fam.apply(1, h).is_zero())
        throw std::invalid_argument("L(1)h = 0 precondition violated");
    const long mode_bound = 3;
    for (long k = 0; k <= degree_bound; ++k) {
        GradedBasis basis = basis_of_degree(d, k);
        for (long m = -mode_bound; m <= mode_bound; ++m)
            for (long n = -mode_bound; n <= mode_bound; ++n)
                for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                    FockElement b = FockElement::single(d, basis.at(bi));
                    FockElement lhs =
                        fam.apply(m, vertex_mode(h, n, b)) - vertex_mode(h, n, fam.apply(m, b));
                    FockElement rhs = GaussianRational(-n) * vertex_mode(h, m + n, b);
                    if (!(lhs == rhs)) return false;
                }
    }
    return true;
}

}  // namespace scv
