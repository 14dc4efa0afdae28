#include "scv/semiconformal.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace scv {

namespace {

Vector matrix_times(const Matrix& a, const Vector& v) { return a.apply(v); }

}  // namespace

void validate_quadratic(const QuadraticVector& q) {
    if (q.d < 1) throw std::invalid_argument("d must be >= 1");
    if (q.A.rows() != static_cast<std::size_t>(q.d) ||
        q.A.cols() != static_cast<std::size_t>(q.d))
        throw std::invalid_argument("A must be d x d");
    if (q.B.size() != static_cast<std::size_t>(q.d))
        throw std::invalid_argument("B must have length d");
    if (q.lambda.size() != static_cast<std::size_t>(q.d))
        throw std::invalid_argument("lambda must have length d");
}

bool check_matrix(const QuadraticVector& q) {
    validate_quadratic(q);
    if (!(q.A.transpose() == q.A)) return false;
    if (!(q.A * q.A == q.A)) return false;
    return matrix_times(q.A, q.lambda) == q.B;
}

FockElement quadratic_to_fock(const QuadraticVector& q) {
    validate_quadratic(q);
    FockElement v(q.d);
    GaussianRational half = rational_of(1, 2);
    for (long i = 1; i <= q.d; ++i) {
        for (long j = i; j <= q.d; ++j) {
            const GaussianRational& aij = q.A.at(i - 1, j - 1);
            if (aij.is_zero()) continue;
            GaussianRational coeff = (i == j) ? aij * half : aij;
            v.add_term(FockMonomial({{1, i}, {1, j}}), coeff);
        }
        v.add_term(FockMonomial({{2, i}}), q.B[i - 1]);
    }
    return v;
}

QuadraticVector fock_to_quadratic(const FockElement& omega2, Vector lambda) {
    if (!omega2.is_homogeneous_of_weight(2))
        throw std::invalid_argument("state must be homogeneous of weight 2");
    const long d = omega2.rank();
    if (lambda.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("lambda length must equal rank");
    QuadraticVector q;
    q.d = d;
    q.A = Matrix(d, d);
    q.B = Vector(d);
    q.lambda = std::move(lambda);
    for (const auto& [m, c] : omega2.terms()) {
        const auto& fs = m.factors();
        if (fs.size() == 1) {
            q.B[fs[0].flavor - 1] = c;
        } else {
            long i = fs[0].flavor, j = fs[1].flavor;
            if (i > j) std::swap(i, j);
            if (i == j) {
                q.A.at(i - 1, i - 1) = GaussianRational(2) * c;
            } else {
                q.A.at(i - 1, j - 1) = c;
                q.A.at(j - 1, i - 1) = c;
            }
        }
    }
    return q;
}

CheckReport check_direct(const FockElement& omega2, const Vector& lambda, long tail_bound) {
    const long d = omega2.rank();
    if (lambda.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("lambda length must equal rank");
    CheckReport rep;
    rep.verdict = true;
    auto fail = [&](const std::string& tag, FockElement witness) {
        rep.verdict = false;
        rep.failures.push_back({tag, std::move(witness)});
    };
    if (!omega2.is_homogeneous_of_weight(2)) {
        fail("weight2", omega2);
        return rep;
    }
    VirasoroFamily lw(conformal_vector(d, lambda));
    VirasoroFamily lp(omega2);

    FockElement two_omega = GaussianRational(2) * omega2;
    if (FockElement e = lp.apply(0, omega2) - two_omega; !e.is_zero()) fail("Lp0", std::move(e));
    if (FockElement e = lw.apply(0, omega2) - two_omega; !e.is_zero()) fail("Lw0", std::move(e));

    if (FockElement e = lp.apply(1, omega2); !e.is_zero()) fail("Lp1", std::move(e));
    if (FockElement e = lw.apply(1, omega2); !e.is_zero()) fail("Lw1", std::move(e));

    auto vacuum_multiple = [](const FockElement& e) {
        for (const auto& [m, c] : e.terms())
            if (!m.is_vacuum()) return false;
        return true;
    };
    FockElement p2 = lp.apply(2, omega2);
    FockElement w2 = lw.apply(2, omega2);
    bool p2_ok = vacuum_multiple(p2), w2_ok = vacuum_multiple(w2);
    if (!p2_ok) fail("Lp2_scalar", p2);
    if (!w2_ok) fail("Lw2_scalar", w2);
    if (FockElement e = p2 - w2; !e.is_zero()) fail("L2_match", std::move(e));
    if (p2_ok && w2_ok && p2 == w2)
        rep.central_charge = GaussianRational(2) * p2.coeff(FockMonomial::vacuum());

    if (FockElement e = lp.apply(-1, omega2) - lw.apply(-1, omega2); !e.is_zero())
        fail("Lm1_match", std::move(e));

    for (long n = 3; n <= std::max<long>(4, tail_bound); ++n) {
        if (FockElement e = lp.apply(n, omega2); !e.is_zero())
            fail("Lp" + std::to_string(n), std::move(e));
        if (FockElement e = lw.apply(n, omega2); !e.is_zero())
            fail("Lw" + std::to_string(n), std::move(e));
    }
    return rep;
}

bool ScPoint::lambda_is_zero() const {
    for (const GaussianRational& x : q_.lambda)
        if (!x.is_zero()) return false;
    return true;
}

ScPoint ScPoint::from_quadratic(const QuadraticVector& q) {
    if (!check_matrix(q))
        throw std::invalid_argument("matrix conditions fail: candidate is not semi-conformal");
    ScPoint p;
    p.q_ = q;
    p.rank_ = rank(q.A);
    GaussianRational tr = q.A.trace();
    if (tr != GaussianRational(static_cast<long>(p.rank_)))
        throw std::logic_error("trace of a symmetric idempotent must equal its rank");
    p.central_charge_ = tr - GaussianRational(12) * dot(q.lambda, q.B);
    return p;
}

// ---------------------------------------------------------------------------
// Polynomial system emission
// ---------------------------------------------------------------------------

namespace {

using Expo = std::vector<int>;

long total_degree(const Expo& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
}

// Ascending degrevlex: smaller total degree first; ties broken so that the
// exponent vector whose trailing difference is positive sorts lower.
struct DegRevLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t k = a.size(); k-- > 0;) {
            int diff = a[k] - b[k];
            if (diff != 0) return diff > 0;
        }
        return false;
    }
};

class Poly {
public:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    void add(const Expo& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_var(std::size_t v, const GaussianRational& c) {
        Expo e(nvars_, 0);
        e[v] = 1;
        add(e, c);
    }
    void add_var2(std::size_t v, std::size_t w, const GaussianRational& c) {
        Expo e(nvars_, 0);
        e[v] += 1;
        e[w] += 1;
        add(e, c);
    }
    void add_const(const GaussianRational& c) { add(Expo(nvars_, 0), c); }

    bool is_zero() const { return terms_.empty(); }

    /// Scale to coprime integer coefficients with a positive-leading sign.
    void normalize();

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Expo, GaussianRational, DegRevLexLess> terms_;
};

void Poly::normalize() {
    if (terms_.empty()) return;
    using boost::multiprecision::mpz_int;
    mpz_int den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        den_lcm = lcm(den_lcm, mpz_int(denominator(c.re())));
        den_lcm = lcm(den_lcm, mpz_int(denominator(c.im())));
    }
    mpz_int num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, mpz_int(numerator(c.re() * Rational(den_lcm))));
        num_gcd = gcd(num_gcd, mpz_int(numerator(c.im() * Rational(den_lcm))));
    }
    if (num_gcd == 0) num_gcd = 1;
    GaussianRational scale{Rational(den_lcm) / Rational(num_gcd)};
    const GaussianRational& lead = terms_.rbegin()->second;
    GaussianRational lead_scaled = lead * scale;
    if (lead_scaled.re() < 0 || (lead_scaled.re() == 0 && lead_scaled.im() < 0))
        scale = -scale;
    for (auto& [e, c] : terms_) c *= scale;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.re() < 0 || (c.re() == 0 && c.im() < 0);
        GaussianRational mag = neg ? -c : c;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string mag_str = mag.is_real() ? mag.str() : "(" + mag.str() + ")";
        std::string piece;
        if (mono.empty())
            piece = mag_str;
        else if (mag == GaussianRational(1))
            piece = mono;
        else
            piece = mag_str + "*" + mono;
        if (first) {
            os << (neg ? "-" : "") << piece;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << piece;
        }
    }
    return os.str();
}

}  // namespace

std::string emit_polynomial_system(long d, const Vector& lambda) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (lambda.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("lambda length must equal d");

    // Variable order: a_1_1, a_1_2, ..., a_1_d, a_2_2, ..., a_d_d, b_1, ..., b_d.
    std::vector<std::string> names;
    std::map<std::pair<long, long>, std::size_t> avar;
    for (long i = 1; i <= d; ++i)
        for (long j = i; j <= d; ++j) {
            avar[{i, j}] = names.size();
            names.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
        }
    std::vector<std::size_t> bvar(d);
    for (long i = 1; i <= d; ++i) {
        bvar[i - 1] = names.size();
        names.push_back("b_" + std::to_string(i));
    }
    const std::size_t nv = names.size();
    auto av = [&](long i, long j) { return avar.at({std::min(i, j), std::max(i, j)}); };
    // Entry of the matrix A in terms of the coefficient variables: the
    // diagonal carries 2*a_i_i, off-diagonal entries are a_i_j.
    auto entry_coeff = [&](long i, long j) {
        return GaussianRational(i == j ? 2 : 1);
    };

    std::vector<Poly> polys;

    // (A^2 - A) diagonal rows.
    for (long i = 1; i <= d; ++i) {
        Poly p(nv);
        for (long k = 1; k <= d; ++k)
            p.add_var2(av(i, k), av(k, i), entry_coeff(i, k) * entry_coeff(k, i));
        p.add_var(av(i, i), GaussianRational(-2));
        polys.push_back(std::move(p));
    }
    // A*B = B rows.
    for (long i = 1; i <= d; ++i) {
        Poly p(nv);
        for (long k = 1; k <= d; ++k) p.add_var2(av(i, k), bvar[k - 1], entry_coeff(i, k));
        p.add_var(bvar[i - 1], GaussianRational(-1));
        polys.push_back(std::move(p));
    }
    // A*lambda^T = B rows.
    for (long i = 1; i <= d; ++i) {
        Poly p(nv);
        for (long k = 1; k <= d; ++k)
            p.add_var(av(i, k), entry_coeff(i, k) * lambda[k - 1]);
        p.add_var(bvar[i - 1], GaussianRational(-1));
        polys.push_back(std::move(p));
    }
    // Scalar trace relation:
    // sum a_ii - 6 sum lambda_i b_i = sum_{i<j} a_ij^2 + 2 sum a_ii^2 - 6 sum b_i^2.
    {
        Poly p(nv);
        for (long i = 1; i <= d; ++i) {
            p.add_var(av(i, i), GaussianRational(1));
            p.add_var(bvar[i - 1], GaussianRational(-6) * lambda[i - 1]);
            p.add_var2(av(i, i), av(i, i), GaussianRational(-2));
            p.add_var2(bvar[i - 1], bvar[i - 1], GaussianRational(6));
            for (long j = i + 1; j <= d; ++j)
                p.add_var2(av(i, j), av(i, j), GaussianRational(-1));
        }
        polys.push_back(std::move(p));
    }
    // (A^2 - A) off-diagonal rows.
    for (long i = 1; i <= d; ++i)
        for (long j = i + 1; j <= d; ++j) {
            Poly p(nv);
            for (long k = 1; k <= d; ++k)
                p.add_var2(av(i, k), av(k, j), entry_coeff(i, k) * entry_coeff(k, j));
            p.add_var(av(i, j), GaussianRational(-1));
            polys.push_back(std::move(p));
        }

    std::ostringstream os;
    for (Poly& p : polys) {
        p.normalize();
        os << p.str(names) << "\n";
    }
    return os.str();
}

ScPoint omega_from_norm_one(const FockElement& h) {
    if (!h.is_homogeneous_of_weight(1) || h.is_zero())
        throw std::invalid_argument("state must be nonzero, homogeneous of weight 1");
    const long d = h.rank();
    // Pairing through the mode action: h_1(h) = <h,h> vacuum.
    FockElement paired = vertex_mode(h, 1, h);
    for (const auto& [m, c] : paired.terms())
        if (!m.is_vacuum()) throw std::logic_error("weight-1 pairing must produce a vacuum multiple");
    GaussianRational norm = paired.coeff(FockMonomial::vacuum());
    if (norm != GaussianRational(1))
        throw std::domain_error("state has <h,h> = " + norm.str() + ", need 1");

    GradedBasis basis = basis_of_degree(d, 1);
    Vector u = basis.coordinates(h);
    QuadraticVector q;
    q.d = d;
    q.A = Matrix(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) q.A.at(i, j) = u[i] * u[j];
    q.B = Vector(d);
    q.lambda = Vector(d);
    return ScPoint::from_quadratic(q);
}

}  // namespace scv
