#pragma once

#include "scv/linalg.hpp"
#include "scv/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace scv {

/// One creation operator h_flavor(-mode) with mode >= 1, flavor in 1..d.
struct Factor {
    long mode = 0;
    long flavor = 0;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product of creation operators applied to the vacuum, kept in the canonical
/// order (mode descending, flavor ascending); repeated factors are allowed.
/// The empty product is the vacuum, weight 0.
class FockMonomial {
public:
    FockMonomial() = default;
    explicit FockMonomial(std::vector<Factor> factors);

    static FockMonomial vacuum() { return {}; }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_vacuum() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    long weight() const;
    long max_flavor() const;

    FockMonomial with_factor(Factor f) const;
    FockMonomial without_index(std::size_t idx) const;

    friend auto operator<=>(const FockMonomial& a, const FockMonomial& b) {
        return a.factors_ <=> b.factors_;
    }
    friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

/// Exact sparse linear combination of Fock monomials for a fixed rank d.
/// Zero coefficients are never stored.
class FockElement {
public:
    explicit FockElement(long rank);

    static FockElement zero(long rank) { return FockElement(rank); }
    static FockElement vacuum(long rank);
    static FockElement single(long rank, FockMonomial m,
                              GaussianRational coeff = GaussianRational(1));

    long rank() const { return rank_; }
    const std::map<FockMonomial, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const FockMonomial& m, const GaussianRational& c);
    GaussianRational coeff(const FockMonomial& m) const;

    FockElement& operator+=(const FockElement& o);
    FockElement& operator-=(const FockElement& o);
    FockElement& operator*=(const GaussianRational& s);
    friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
    friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
    friend FockElement operator*(const GaussianRational& s, FockElement v) { return v *= s; }

    friend bool operator==(const FockElement& a, const FockElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Weight when every term has the same weight; nullopt otherwise.
    /// The zero element reports weight 0.
    std::optional<long> homogeneous_weight() const;
    bool is_homogeneous_of_weight(long w) const;
    long max_term_weight() const;

private:
    long rank_;
    std::map<FockMonomial, GaussianRational> terms_;
};

/// h_flavor(mode) acting on v. mode < 0 multiplies by the creation factor;
/// mode > 0 annihilates by the derivation rule, each matching factor
/// contributing mode * (monomial with that factor removed); mode = 0 is the
/// zero operator (highest weight lambda = 0); the level element acts as the
/// identity throughout (level 1). Throws on flavor outside 1..rank.
FockElement apply_heisenberg(long flavor, long mode, const FockElement& v);

/// All weight-`degree` monomials for the given rank, in a fixed deterministic
/// order, with coordinate lookups.
class GradedBasis {
public:
    GradedBasis(long rank, long degree, std::vector<FockMonomial> monomials);

    long rank() const { return rank_; }
    long degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const FockMonomial& at(std::size_t k) const { return monomials_[k]; }
    const std::vector<FockMonomial>& monomials() const { return monomials_; }
    std::size_t index_of(const FockMonomial& m) const;  // throws if absent

    /// Coordinates of a homogeneous element of this degree. Throws if the
    /// element has a term outside the basis.
    Vector coordinates(const FockElement& v) const;
    FockElement element_of(const Vector& coords) const;

private:
    long rank_;
    long degree_;
    std::vector<FockMonomial> monomials_;
    std::map<FockMonomial, std::size_t> index_;
};

GradedBasis basis_of_degree(long rank, long degree);

/// Test instrument: perturbs the single structure constant
/// [h_1(1), h_1(-1)] = 1 to 1 + epsilon, so that every identity the suite
/// checks becomes falsifiable. Off by default; not thread-safe; use the guard.
void set_heisenberg_fault(const GaussianRational& epsilon);
void clear_heisenberg_fault();
bool heisenberg_fault_active();

struct HeisenbergFaultGuard {
    explicit HeisenbergFaultGuard(const GaussianRational& epsilon) { set_heisenberg_fault(epsilon); }
    ~HeisenbergFaultGuard() { clear_heisenberg_fault(); }
    HeisenbergFaultGuard(const HeisenbergFaultGuard&) = delete;
    HeisenbergFaultGuard& operator=(const HeisenbergFaultGuard&) = delete;
};

}  // namespace scv
