#pragma once

#include "scv/scalar.hpp"

#include <cstdint>
#include <vector>

namespace scv {

using Vector = std::vector<GaussianRational>;

/// Dense matrix over Q(i). Graded pieces at the scales this project handles
/// stay small enough that sparse storage never pays off.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix transpose() const;
    GaussianRational trace() const;  // throws on non-square
    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const GaussianRational& s) const;
    Vector apply(const Vector& v) const;  // matrix * column vector

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> e_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot rows are
/// chosen by smallest representation size (deterministic tie-break by index)
/// to limit coefficient growth.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space; one vector per free column, with a 1 in the
/// free coordinate. Size is cols - rank.
std::vector<Vector> kernel(const Matrix& m);

/// A^T == A and A*A == A, entrywise exact. Throws std::invalid_argument on
/// non-square input.
bool is_symmetric_idempotent(const Matrix& a);

/// Inverse of a square matrix via [M | I] elimination. Throws std::domain_error
/// if singular.
Matrix inverse(const Matrix& m);

/// Rank of the reduction of m into F_{p^2} = F_p[x]/(x^2+1), for a prime
/// p ≡ 3 (mod 4). Specialization cannot increase rank, so the result is a
/// lower bound for the rank over Q(i). Returns false in `ok` when some
/// denominator vanishes mod p (bad prime).
struct ModpRank {
    bool ok = false;
    std::size_t rank = 0;
};
ModpRank rank_mod_p(const Matrix& m, std::uint32_t p);

/// Primes ≡ 3 (mod 4) near 2^31 used for modular rank certificates.
const std::vector<std::uint32_t>& certificate_primes();

/// Subspace of the fixed orthonormal coordinate space, stored as an
/// independent basis. Construction rejects dependent generating sets.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool same_span(const Subspace& o) const;

    /// Matrix with the basis vectors as columns.
    Matrix basis_columns() const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

/// Gram matrix V^T V of the basis under the fixed symmetric bilinear form
/// (no conjugation; the form is orthonormal-coordinate dot product).
Matrix gram(const Subspace& s);

/// True iff the bilinear form stays nondegenerate on the subspace, i.e.
/// det(V^T V) != 0. The zero subspace is vacuously regular. Throws on a zero
/// basis vector.
bool subspace_regular(const Subspace& s);

GaussianRational dot(const Vector& a, const Vector& b);

}  // namespace scv
