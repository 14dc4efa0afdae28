#pragma once

#include "scv/fock.hpp"
#include "scv/linalg.hpp"
#include "scv/modes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scv {

/// Weight-2 state in matrix form: omega' = (1/2) h(-1)^T A h(-1) 1 + h(-2)^T B 1,
/// carried together with the ambient shift vector lambda. A is symmetric by
/// construction (the coefficient of h_i(-1)h_j(-1) appears at both (i,j) and
/// (j,i); diagonal entries are twice the square coefficients). The shift
/// compatibility condition is A*lambda^T = B with B a column vector.
struct QuadraticVector {
    long d = 0;
    Matrix A;       // d x d
    Vector B;       // length d
    Vector lambda;  // length d
};

/// Shape validation: A is d x d, B and lambda have length d. Throws
/// std::invalid_argument.
void validate_quadratic(const QuadraticVector& q);

/// The closed-form semi-conformality test: A^T = A, A^2 = A, A*lambda^T = B,
/// all exact. Throws on shape mismatch.
bool check_matrix(const QuadraticVector& q);

FockElement quadratic_to_fock(const QuadraticVector& q);

/// Extracts (A, B) from a homogeneous weight-2 state; exact inverse of
/// quadratic_to_fock. Throws std::invalid_argument on inhomogeneous input.
QuadraticVector fock_to_quadratic(const FockElement& omega2, Vector lambda);

struct CheckFailure {
    std::string equation;  // stable tag naming the failed equation
    FockElement witness;   // the exact discrepancy
};

struct CheckReport {
    bool verdict = false;
    std::vector<CheckFailure> failures;
    std::optional<GaussianRational> central_charge;
};

/// The defining-equation test, evaluated exactly with the mode calculus:
///   L'(0)w' = L(0)w' = 2w';  L'(1)w' = L(1)w' = 0;
///   L'(2)w' = L(2)w' = (c'/2)1;  L'(-1)w' = L(-1)w';
///   L'(n)w' = L(n)w' = 0 for 3 <= n <= tail_bound.
/// L comes from the conformal vector for lambda, L' from omega2 itself.
/// Failures are data, not errors; c' is recorded from the L'(2) equation.
CheckReport check_direct(const FockElement& omega2, const Vector& lambda,
                         long tail_bound = 4);

/// A verified semi-conformal point: symmetric idempotent A with A*lambda^T = B.
/// rank(A) = trace(A) is exact; the central charge is
/// trace(A) - 12 * lambda * B (= trace(A) = rank(A) when lambda = 0).
class ScPoint {
public:
    static ScPoint from_quadratic(const QuadraticVector& q);  // throws if conditions fail

    const QuadraticVector& quadratic() const { return q_; }
    long d() const { return q_.d; }
    const Matrix& A() const { return q_.A; }
    const Vector& B() const { return q_.B; }
    const Vector& lambda() const { return q_.lambda; }
    std::size_t rank_of_A() const { return rank_; }
    const GaussianRational& central_charge() const { return central_charge_; }
    bool lambda_is_zero() const;

    FockElement state() const { return quadratic_to_fock(q_); }

    friend bool operator==(const ScPoint& a, const ScPoint& b) {
        return a.q_.d == b.q_.d && a.q_.A == b.q_.A && a.q_.B == b.q_.B &&
               a.q_.lambda == b.q_.lambda;
    }

private:
    ScPoint() = default;
    QuadraticVector q_;
    std::size_t rank_ = 0;
    GaussianRational central_charge_;
};

/// The polynomial system cutting out the semi-conformal locus in the
/// coefficients a_i_j (i <= j) and b_i, with lambda substituted as exact
/// constants. One polynomial per line in a fixed order (diagonal idempotency
/// rows, A*B = B rows, A*lambda^T = B rows, the scalar trace relation, then
/// off-diagonal idempotency), each polynomial normalized to coprime integer
/// coefficients with positive leading coefficient and terms in descending
/// degrevlex order over a_1_1, a_1_2, ..., a_d_d, b_1, ..., b_d.
std::string emit_polynomial_system(long d, const Vector& lambda);

/// The rank-one point (1/2) h(-1)^2 1 for a weight-1 state h with <h,h> = 1,
/// i.e. A = u u^T for the coordinate vector u of h (lambda = 0 ambient).
/// The pairing is computed as the mode pairing h_1(h) = <h,h> 1.
/// Throws std::domain_error carrying the actual norm when <h,h> != 1.
ScPoint omega_from_norm_one(const FockElement& h);

}  // namespace scv
