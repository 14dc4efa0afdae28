#include "scv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace scv {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

GaussianRational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    GaussianRational t;
    for (std::size_t k = 0; k < rows_; ++k) t += at(k, k);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    Matrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const GaussianRational& b = o.at(k, c);
                if (!b.is_zero()) m.at(r, c) += a * b;
            }
        }
    return m;
}

Matrix Matrix::scaled(const GaussianRational& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch in apply");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

RrefResult rref(const Matrix& input) {
    RrefResult res;
    res.reduced = input;
    Matrix& m = res.reduced;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = rows;
        std::size_t best_bits = 0;
        for (std::size_t r = lead; r < rows; ++r) {
            if (m.at(r, c).is_zero()) continue;
            std::size_t b = scalar_bits(m.at(r, c));
            if (pivot == rows || b < best_bits) {
                pivot = r;
                best_bits = b;
            }
        }
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t cc = 0; cc < cols; ++cc) std::swap(m.at(pivot, cc), m.at(lead, cc));
        GaussianRational inv = m.at(lead, c);
        for (std::size_t cc = c; cc < cols; ++cc)
            if (!m.at(lead, cc).is_zero()) m.at(lead, cc) /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c);
            for (std::size_t cc = c; cc < cols; ++cc)
                if (!m.at(lead, cc).is_zero()) m.at(r, cc) -= f * m.at(lead, cc);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = GaussianRational(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.reduced.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_symmetric_idempotent(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("candidate matrix must be square");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r + 1; c < a.cols(); ++c)
            if (a.at(r, c) != a.at(c, r)) return false;
    return a * a == a;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = GaussianRational(1);
    }
    RrefResult res = rref(aug);
    for (std::size_t k = 0; k < n; ++k)
        if (k >= res.pivot_cols.size() || res.pivot_cols[k] != k)
            throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = res.reduced.at(r, n + c);
    return inv;
}

namespace {

struct Fp2 {
    std::uint64_t a = 0, b = 0;  // a + b*x with x^2 = -1
};

std::uint64_t addm(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    std::uint64_t s = x + y;
    return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return x >= y ? x - y : x + p - y;
}
std::uint64_t mulm(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x * y) % p; }

std::uint64_t powm(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, x, p);
        x = mulm(x, x, p);
        e >>= 1;
    }
    return r;
}

Fp2 mul2(const Fp2& x, const Fp2& y, std::uint64_t p) {
    return {subm(mulm(x.a, y.a, p), mulm(x.b, y.b, p), p),
            addm(mulm(x.a, y.b, p), mulm(x.b, y.a, p), p)};
}
Fp2 sub2(const Fp2& x, const Fp2& y, std::uint64_t p) {
    return {subm(x.a, y.a, p), subm(x.b, y.b, p)};
}
bool zero2(const Fp2& x) { return x.a == 0 && x.b == 0; }

Fp2 inv2(const Fp2& x, std::uint64_t p) {
    // (a+bx)^-1 = (a-bx)/(a^2+b^2); a^2+b^2 != 0 in F_p when p ≡ 3 (mod 4).
    std::uint64_t n = addm(mulm(x.a, x.a, p), mulm(x.b, x.b, p), p);
    std::uint64_t ninv = powm(n, p - 2, p);
    return {mulm(x.a, ninv, p), mulm(subm(0, x.b, p), ninv, p)};
}

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for n < 3.2e18 with these bases.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        std::uint64_t x = powm(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

}  // namespace

const std::vector<std::uint32_t>& certificate_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> out;
        for (std::uint64_t n = (1ull << 31) - 1; out.size() < 5; n -= 4) {
            // n starts at 2^31-1 ≡ 3 (mod 4); stepping by 4 preserves that.
            if (is_prime_u32(n)) out.push_back(static_cast<std::uint32_t>(n));
        }
        return out;
    }();
    return primes;
}

ModpRank rank_mod_p(const Matrix& m, std::uint32_t prime) {
    const std::uint64_t p = prime;
    auto reduce_rat = [&](const Rational& r, std::uint64_t& out) -> bool {
        std::uint64_t num = mpz_fdiv_ui(mpq_numref(r.backend().data()), p);
        std::uint64_t den = mpz_fdiv_ui(mpq_denref(r.backend().data()), p);
        if (den == 0) return false;
        out = mulm(num, powm(den, p - 2, p), p);
        return true;
    };
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Fp2>> a(rows, std::vector<Fp2>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (!reduce_rat(m.at(r, c).re(), a[r][c].a)) return {};
            if (!reduce_rat(m.at(r, c).im(), a[r][c].b)) return {};
        }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rk; r < rows; ++r)
            if (!zero2(a[r][c])) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rk]);
        Fp2 inv = inv2(a[rk][c], p);
        for (std::size_t cc = c; cc < cols; ++cc) a[rk][cc] = mul2(a[rk][cc], inv, p);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            if (zero2(a[r][c])) continue;
            Fp2 f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] = sub2(a[r][cc], mul2(f, a[rk][cc], p), p);
        }
        ++rk;
    }
    return {true, rk};
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
    for (const Vector& v : basis_)
        if (v.size() != ambient_)
            throw std::invalid_argument("basis vector length does not match ambient dimension");
    if (!basis_.empty() && rank(Matrix::from_rows(basis_)) != basis_.size())
        throw std::invalid_argument("basis vectors are linearly dependent");
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows)) == dim();
}

bool Subspace::same_span(const Subspace& o) const {
    if (ambient_ != o.ambient_) return false;
    if (dim() != o.dim()) return false;
    for (const Vector& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

Matrix Subspace::basis_columns() const {
    Matrix v(ambient_, basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c)
        for (std::size_t r = 0; r < ambient_; ++r) v.at(r, c) = basis_[c][r];
    return v;
}

Matrix gram(const Subspace& s) {
    Matrix v = s.basis_columns();
    return v.transpose() * v;
}

bool subspace_regular(const Subspace& s) {
    for (const Vector& b : s.basis()) {
        bool all_zero = std::all_of(b.begin(), b.end(),
                                    [](const GaussianRational& x) { return x.is_zero(); });
        if (all_zero) throw std::invalid_argument("zero vector in subspace basis");
    }
    if (s.dim() == 0) return true;
    return rank(gram(s)) == s.dim();
}

GaussianRational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch in dot");
    GaussianRational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace scv
