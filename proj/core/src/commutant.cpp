#include "scv/commutant.hpp"

#include "scv/fock.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace scv {

namespace {

void require_lambda_zero(const ScPoint& p) {
    if (!p.lambda_is_zero())
        throw std::invalid_argument("commutant computations are supported for lambda = 0 only");
}

// Zero mode of h_i(-1)h_j(-1)1 applied to a weight-n monomial, through the
// expansion sum_k :h_i(k) h_j(-1-k):. Only 1 <= k <= n contributes on V_n;
// the k = 0, -1 terms carry an h(0) and vanish on the lambda = 0 module.
FockElement pair_zero_mode(long i, long j, const FockElement& b, long n) {
    FockElement out(b.rank());
    for (long k = 1; k <= n; ++k) {
        out += apply_heisenberg(j, -1 - k, apply_heisenberg(i, k, b));
        out += apply_heisenberg(i, -1 - k, apply_heisenberg(j, k, b));
    }
    return out;
}

// Matrices of the quadratic-generator zero modes V_n -> V_{n+1}, cached per
// (d, i, j, n). Map node references stay valid across insertions, so the
// returned reference outlives the lock.
const Matrix& pair_mode_matrix(long d, long i, long j, long n) {
    static std::mutex lock;
    static std::map<std::tuple<long, long, long, long>, Matrix> cache;
    auto key = std::make_tuple(d, i, j, n);
    {
        std::scoped_lock guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GradedBasis src = basis_of_degree(d, n);
    GradedBasis dst = basis_of_degree(d, n + 1);
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        FockElement image = pair_zero_mode(i, j, FockElement::single(d, src.at(c)), n);
        Vector coords = dst.coordinates(image);
        for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, c) = std::move(coords[r]);
    }
    std::scoped_lock guard(lock);
    return cache.emplace(key, std::move(m)).first->second;
}

}  // namespace

GradedMap graded_operator(const ScPoint& p, GradedWhich which, long n) {
    require_lambda_zero(p);
    if (n < 0) throw std::invalid_argument("degree must be >= 0");
    const long d = p.d();
    GradedBasis src = basis_of_degree(d, n);
    GradedBasis dst = basis_of_degree(d, n + 1);
    Matrix m(dst.size(), src.size());
    GaussianRational half = rational_of(1, 2);
    for (long i = 1; i <= d; ++i) {
        for (long j = i; j <= d; ++j) {
            // omega' = sum_{i<=j} alpha_ij h_i(-1)h_j(-1)1 with
            // alpha_ii = A_ii/2, alpha_ij = A_ij.
            GaussianRational alpha =
                (i == j) ? p.A().at(i - 1, i - 1) * half : p.A().at(i - 1, j - 1);
            if (which == GradedWhich::l_minus_lprime_minus1) {
                GaussianRational full = (i == j) ? half : GaussianRational(0);
                alpha = full - alpha;
            }
            if (alpha.is_zero()) continue;
            m = m + pair_mode_matrix(d, i, j, n).scaled(alpha);
        }
    }
    return GradedMap{n, n + 1, std::move(m)};
}

namespace {

// Kernel candidates for the graded operators: weight-n monomials in the
// rotated creation operators K_c(-m) = sum_i (k_c)_i h_i(-m), where the k_c
// run over a basis of Ker A (commutant) or Im A (double commutant).
std::vector<Vector> structural_kernel_candidates(const std::vector<Vector>& generators,
                                                 long d, long n) {
    std::vector<Vector> out;
    GradedBasis target = basis_of_degree(d, n);
    if (generators.empty()) {
        if (n == 0) out.push_back(target.coordinates(FockElement::vacuum(d)));
        return out;
    }
    const long colors = static_cast<long>(generators.size());
    GradedBasis shapes = basis_of_degree(colors, n);
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        FockElement elem = FockElement::vacuum(d);
        for (const Factor& f : shapes.at(s).factors()) {
            const Vector& gen = generators[f.flavor - 1];
            FockElement next(d);
            for (long i = 1; i <= d; ++i) {
                if (gen[i - 1].is_zero()) continue;
                next += gen[i - 1] * apply_heisenberg(i, -f.mode, elem);
            }
            elem = std::move(next);
        }
        out.push_back(target.coordinates(elem));
    }
    return out;
}

// Exact nullity. Plain kernel for small matrices; for large ones an exact
// certificate: candidates verified in the kernel and independent modulo p
// give nullity >= e, and rank mod p = cols - e gives nullity <= e. Any
// inconclusive or contradicting outcome falls back to rational elimination.
std::int64_t nullity_exact(const Matrix& m, const std::vector<Vector>& candidates) {
    const std::size_t cells = m.rows() * m.cols();
    if (cells <= 20000) return static_cast<std::int64_t>(kernel(m).size());

    const std::size_t e = candidates.size();
    bool all_in_kernel = true;
    for (const Vector& v : candidates) {
        Vector image = m.apply(v);
        for (const GaussianRational& x : image)
            if (!x.is_zero()) {
                all_in_kernel = false;
                break;
            }
        if (!all_in_kernel) break;
    }
    if (all_in_kernel) {
        Matrix cand(m.cols(), e);
        for (std::size_t c = 0; c < e; ++c)
            for (std::size_t r = 0; r < m.cols(); ++r) cand.at(r, c) = candidates[c][r];
        for (std::uint32_t p : certificate_primes()) {
            ModpRank cand_rank = rank_mod_p(cand, p);
            if (!cand_rank.ok || cand_rank.rank != e) continue;
            ModpRank op_rank = rank_mod_p(m, p);
            if (!op_rank.ok) continue;
            if (op_rank.rank + e == m.cols()) return static_cast<std::int64_t>(e);
            // A larger modular rank already rules the expected nullity out;
            // fall through to the exact arbiter for the true value.
            break;
        }
    }
    return static_cast<std::int64_t>(kernel(m).size());
}

}  // namespace

CommutantProfile commutant_dims(const ScPoint& p, long degree_bound) {
    require_lambda_zero(p);
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
    const long d = p.d();
    const long r = static_cast<long>(p.rank_of_A());

    CommutantProfile profile{p, degree_bound, {}, {}, {}, {}};
    profile.expected_commutant = colored_partition_numbers(d - r, degree_bound);
    profile.expected_double_commutant = colored_partition_numbers(r, degree_bound);

    std::vector<Vector> ker_basis = kernel(p.A());
    RrefResult ar = rref(p.A());
    std::vector<Vector> im_basis;
    for (std::size_t c : ar.pivot_cols) {
        Vector col(d);
        for (long row = 0; row < d; ++row) col[row] = p.A().at(row, c);
        im_basis.push_back(std::move(col));
    }

    for (long n = 0; n <= degree_bound; ++n) {
        GradedMap lp = graded_operator(p, GradedWhich::lprime_minus1, n);
        profile.dims_commutant.push_back(
            nullity_exact(lp.matrix, structural_kernel_candidates(ker_basis, d, n)));
        GradedMap diff = graded_operator(p, GradedWhich::l_minus_lprime_minus1, n);
        profile.dims_double_commutant.push_back(
            nullity_exact(diff.matrix, structural_kernel_candidates(im_basis, d, n)));
    }
    return profile;
}

bool weight1_identification(const ScPoint& p) {
    require_lambda_zero(p);
    const long d = p.d();
    GradedMap lp = graded_operator(p, GradedWhich::lprime_minus1, 1);
    GradedMap diff = graded_operator(p, GradedWhich::l_minus_lprime_minus1, 1);
    // V_1 coordinates align with the coordinate space of A (basis h_i(-1)1
    // ordered by flavor).
    Subspace ker_lp(d, kernel(lp.matrix));
    Subspace ker_diff(d, kernel(diff.matrix));
    RrefResult r = rref(p.A());
    std::vector<Vector> image_basis;
    for (std::size_t c : r.pivot_cols) {
        Vector col(d);
        for (long row = 0; row < d; ++row) col[row] = p.A().at(row, c);
        image_basis.push_back(std::move(col));
    }
    Subspace im_a(d, std::move(image_basis));
    Subspace ker_a(d, kernel(p.A()));
    return ker_diff.same_span(im_a) && ker_lp.same_span(ker_a);
}

bool tensor_dim_check(const CommutantProfile& profile) {
    const long d = profile.point.d();
    for (long n = 0; n <= profile.degree_bound; ++n) {
        std::int64_t conv = 0;
        for (long k = 0; k <= n; ++k)
            conv += profile.dims_commutant[k] * profile.dims_double_commutant[n - k];
        if (conv != static_cast<std::int64_t>(basis_of_degree(d, n).size())) return false;
    }
    return true;
}

bool tensor_dim_check(const ScPoint& p, long degree_bound) {
    return tensor_dim_check(commutant_dims(p, degree_bound));
}

DimensionCriterion dimension_criterion_check(const CommutantProfile& profile) {
    if (profile.degree_bound < 1) return DimensionCriterion::precondition_violated;
    const long d = profile.point.d();
    std::int64_t c1 = profile.dims_commutant[1];
    std::int64_t dc1 = profile.dims_double_commutant[1];
    if (c1 == 0 || dc1 == 0 || c1 + dc1 != d) return DimensionCriterion::precondition_violated;
    return tensor_dim_check(profile) ? DimensionCriterion::holds : DimensionCriterion::fails;
}

DimensionCriterion dimension_criterion_check(const ScPoint& p, long degree_bound) {
    return dimension_criterion_check(commutant_dims(p, degree_bound));
}

}  // namespace scv
