#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace scv {

using Rational = boost::multiprecision::mpq_rational;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
/// All arithmetic is exact; the underlying mpq representation keeps
/// denominators positive and coprime to numerators.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Parses "p/q", "p", "p/q+r/si", "p/q-r/si", "ri", "i", "-i" and the
    /// same forms with either part omitted. Throws std::invalid_argument.
    static GaussianRational parse(std::string_view s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2. Over the rationals this vanishes only at zero, so it
    /// certifies invertibility.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    /// Canonical form: "p/q" when the imaginary part is zero, otherwise
    /// "p/q+r/si" / "p/q-r/si" (each part printed without "/1").
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Lexicographic order on (re, im); a deterministic tie-breaker, not a field order.
int cmp_lex(const GaussianRational& a, const GaussianRational& b);

/// Rough bit-size of the representation, used to pick simple pivots.
std::size_t scalar_bits(const GaussianRational& a);

GaussianRational rational_of(long num, long den);

}  // namespace scv
