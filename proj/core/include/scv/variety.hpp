#pragma once

#include "scv/semiconformal.hpp"

#include <string>
#include <vector>

namespace scv {

/// omega' -> omega - omega': A -> I - A, B -> lambda^T - B. An exact
/// order-reversing involution on verified points.
ScPoint involution(const ScPoint& p);

/// p1 <= p2 iff A1*A2 = A2*A1 = A1 (exact). Throws std::invalid_argument when
/// the points do not share (d, lambda).
bool leq_matrix(const ScPoint& p1, const ScPoint& p2);

/// Column-space containment Im A1 ⊆ Im A2, decided by row reduction. Agrees
/// with leq_matrix; kept as an independent route for cross-checks.
bool image_contained(const ScPoint& p1, const ScPoint& p2);

/// The mode-calculus order test: with L2 the modes of p2's state and L1 those
/// of p1's state, checks exactly
///   L2(0)w1 = 2w1;  L2(1)w1 = 0;  L2(2)w1 = L1(2)w1;
///   L2(-1)w1 = L1(-1)w1;  L2(n)w1 = 0 for 3 <= n <= tail_bound.
bool leq_direct(const ScPoint& p1, const ScPoint& p2, long tail_bound = 4);

struct ImageKernel {
    Subspace image;
    Subspace kern;
};

/// Column space and null space of A; both regular, mutually orthogonal under
/// the fixed form, with dimensions summing to d.
ImageKernel image_and_kernel(const ScPoint& p);

/// The orthogonal projector onto a regular subspace: A = V (V^T V)^-1 V^T with
/// the basis as columns of V (lambda = 0 ambient). Throws std::invalid_argument
/// on a non-regular subspace.
ScPoint projector_from_subspace(const Subspace& s);

/// Element of O(h) over Q(i): o^T o = o o^T = I exactly.
struct OrthogonalElement {
    Matrix o;
    static OrthogonalElement make(Matrix o);  // throws if not orthogonal
};

/// A -> o A o^T. Rank and semi-conformality are preserved. For lambda != 0 the
/// action is restricted to o with o lambda^T = lambda^T (the conformal
/// stabilizer); violations throw std::invalid_argument.
ScPoint conjugate(const ScPoint& p, const OrthogonalElement& o);

/// A maximal chain 0 = A_0 < A_1 < ... < A_d = I of coordinate projectors
/// (lambda = 0). Every adjacent pair is verified by both order routes.
struct Chain {
    std::vector<ScPoint> points;
};
Chain build_chain(long d);

/// Extremality by rank: 0 -> bottom, 1 -> minimal, d-1 -> maximal, d -> top.
/// For small d the classes overlap, so all applicable flags are reported;
/// a point with no flag set is interior. The involution swaps
/// bottom <-> top and minimal <-> maximal.
struct ExtremalClass {
    bool bottom = false;
    bool minimal = false;
    bool maximal = false;
    bool top = false;
    bool interior() const { return !bottom && !minimal && !maximal && !top; }
    std::vector<std::string> labels() const;
};
ExtremalClass classify_extremal(const ScPoint& p);

}  // namespace scv
