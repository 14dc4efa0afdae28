#pragma once

#include "scv/fock.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace scv {

/// v_m(w) for the vertex operator Y(v, z) = sum_m v_m z^{-m-1}, computed by
/// free-field reconstruction: a monomial h_{i1}(-n_1)...h_{ik}(-n_k)1 expands
/// to the normally ordered product of derived fields, where the field for a
/// factor of mode n contributes h_i(j) with coefficient
/// (-1)^(n-1) * binom(j+n-1, n-1), and the mode tuples satisfy
/// sum_t (j_t + n_t) = m + 1. Annihilation modes act first; h_i(0) kills every
/// term. Only the finitely many tuples that can act nonzero on w are visited.
FockElement vertex_mode(const FockElement& v, long m, const FockElement& w);

/// L'(n)(w) = omega2_{n+1}(w) for a homogeneous weight-2 state omega2.
/// Throws std::invalid_argument if omega2 is not homogeneous of weight 2.
FockElement virasoro_mode(const FockElement& omega2, long n, const FockElement& w);

/// (1/2) sum_i h_i(-1)^2 1 + sum_i lambda_i h_i(-2) 1.
FockElement conformal_vector(long rank, const Vector& lambda);

/// Virasoro modes of one weight-2 state with per-monomial memoization.
class VirasoroFamily {
public:
    explicit VirasoroFamily(FockElement omega2);

    const FockElement& omega() const { return omega_; }
    long rank() const { return omega_.rank(); }

    FockElement apply(long n, const FockElement& w) const;

    /// c' with L'(2) omega' = (c'/2) vacuum; nullopt when that value is not a
    /// multiple of the vacuum.
    std::optional<GaussianRational> central_charge() const;

private:
    FockElement omega_;
    mutable std::mutex memo_lock_;
    mutable std::map<std::pair<long, FockMonomial>, FockElement> memo_;
};

struct BracketReport {
    bool ok = false;
    GaussianRational central_charge;
    std::string failure;  // names (m, n, degree, basis vector) on mismatch
};

/// Verifies [L'(m), L'(n)] = (m-n) L'(m+n) + ((m^3-m)/12) delta_{m+n,0} c'
/// as an exact operator identity on every graded piece of degree <= degree_bound
/// for |m|, |n| <= mode_bound, with c' read from L'(2) omega2.
BracketReport virasoro_bracket_check(const FockElement& omega2, long degree_bound,
                                     long mode_bound);

/// Verifies [L(m), h_n] = -n h_{m+n} on all graded pieces of degree <=
/// degree_bound, |m|, |n| <= 3, where L comes from the conformal vector for
/// `lambda` and h_n = (h)_n for a homogeneous weight-1 state h. Requires
/// L(1)h = 0 (throws std::invalid_argument otherwise).
bool lh_commutator_check(const FockElement& h, const Vector& lambda, long degree_bound);

}  // namespace scv
