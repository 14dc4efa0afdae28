#pragma once

#include "scv/partitions.hpp"
#include "scv/semiconformal.hpp"

#include <cstdint>
#include <vector>

namespace scv {

enum class GradedWhich {
    lprime_minus1,          // L'(-1)
    l_minus_lprime_minus1,  // L(-1) - L'(-1)
};

/// Exact matrix of a degree-raising operator between graded pieces, in the
/// canonical graded-basis coordinates.
struct GradedMap {
    long source_degree = 0;
    long target_degree = 0;
    Matrix matrix;  // dim V_{target} x dim V_{source}
};

/// Matrix of L'(-1) or L(-1) - L'(-1) on V_n -> V_{n+1}, assembled from the
/// explicit normally ordered expansion sum_k :h_i(k) h_j(-1-k): of the zero
/// modes of the quadratic generators (an independent route from the
/// reconstruction-based mode evaluation). Requires lambda = 0.
GradedMap graded_operator(const ScPoint& p, GradedWhich which, long n);

/// Graded dimensions of the commutant C(<w'>) = Ker L'(-1) and the double
/// commutant Ker(L(-1) - L'(-1)), together with the colored-partition values
/// they must equal: with r = rank(A), the commutant matches (d-r) colors and
/// the double commutant matches r colors.
struct CommutantProfile {
    ScPoint point;
    long degree_bound = 0;
    std::vector<std::int64_t> dims_commutant;
    std::vector<std::int64_t> dims_double_commutant;
    std::vector<std::int64_t> expected_commutant;
    std::vector<std::int64_t> expected_double_commutant;

    bool matches_expected() const {
        return dims_commutant == expected_commutant &&
               dims_double_commutant == expected_double_commutant;
    }
};

/// Nullities of the two graded operators for n <= degree_bound. Small graded
/// pieces use plain exact kernels; large ones use an exact certificate
/// (verified kernel vectors for the lower bound, modular rank for the upper
/// bound) with full rational elimination as the fallback arbiter.
/// Requires lambda = 0 (throws std::invalid_argument otherwise).
CommutantProfile commutant_dims(const ScPoint& p, long degree_bound);

/// Exact subspace identities at weight one:
/// Im A = Ker(L(-1) - L'(-1)) ∩ V_1 and Ker A = Ker L'(-1) ∩ V_1.
bool weight1_identification(const ScPoint& p);

/// Graded-dimension form of the tensor decomposition V ≅ C(<w'>) ⊗ C(C(<w'>)):
/// sum_k dims_commutant[k] * dims_double_commutant[n-k] = dim V_n for all
/// n <= degree_bound, using the actually computed nullities.
bool tensor_dim_check(const CommutantProfile& profile);
bool tensor_dim_check(const ScPoint& p, long degree_bound);

enum class DimensionCriterion {
    holds,
    fails,
    precondition_violated,  // point is bottom or top, or a weight-1 piece vanishes
};

/// Dimension-criterion decomposition test: both weight-1 pieces nonzero and
/// summing to d, then the convolution identity up to degree_bound.
DimensionCriterion dimension_criterion_check(const CommutantProfile& profile);
DimensionCriterion dimension_criterion_check(const ScPoint& p, long degree_bound = 6);

}  // namespace scv
