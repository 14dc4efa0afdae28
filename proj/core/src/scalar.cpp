#include "scv/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace scv {

namespace {

std::string rat_str(const Rational& r) { return r.str(); }

bool valid_rational_token(std::string_view t) {
    if (t.empty()) return false;
    std::size_t pos = 0;
    if (t[0] == '+' || t[0] == '-') pos = 1;
    bool digits = false, slash = false, digits_after = false;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '/') {
            if (slash || !digits) return false;
            slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? digits_after : digits) = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || digits_after);
}

Rational parse_rational(std::string_view t) {
    if (!valid_rational_token(t))
        throw std::invalid_argument("bad rational token: '" + std::string(t) + "'");
    if (t.front() == '+') t.remove_prefix(1);  // mpq rejects an explicit plus
    return Rational(std::string(t));
}

}  // namespace

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    GaussianRational c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string s = rat_str(re_);
    if (im_ > 0) {
        s += "+" + rat_str(im_) + "i";
    } else {
        s += "-" + rat_str(-im_) + "i";
    }
    return s;
}

GaussianRational GaussianRational::parse(std::string_view in) {
    std::string s;
    s.reserve(in.size());
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");

    // Split at the last top-level '+' or '-' that is not a leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
        if (s[p] == '+' || s[p] == '-') {
            split = p;
            break;
        }
    }

    auto parse_part = [](std::string_view t, bool& imaginary) -> Rational {
        imaginary = !t.empty() && t.back() == 'i';
        if (imaginary) {
            t.remove_suffix(1);
            if (t.empty() || t == "+") return Rational(1);
            if (t == "-") return Rational(-1);
        }
        return parse_rational(t);
    };

    bool imag_a = false, imag_b = false;
    if (split == std::string::npos) {
        Rational v = parse_part(s, imag_a);
        return imag_a ? GaussianRational(Rational(0), v) : GaussianRational(v);
    }
    std::string_view first(s.data(), split);
    std::string_view second(s.data() + split, s.size() - split);
    Rational a = parse_part(first, imag_a);
    Rational b = parse_part(second, imag_b);
    if (imag_a == imag_b)
        throw std::invalid_argument("scalar needs one real and one imaginary part: '" + s + "'");
    if (imag_a) std::swap(a, b);
    return {a, b};
}

int cmp_lex(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() < b.re()) return -1;
    if (a.re() > b.re()) return 1;
    if (a.im() < b.im()) return -1;
    if (a.im() > b.im()) return 1;
    return 0;
}

std::size_t scalar_bits(const GaussianRational& a) {
    auto bits = [](const Rational& r) {
        return mpz_sizeinbase(mpq_numref(r.backend().data()), 2) +
               mpz_sizeinbase(mpq_denref(r.backend().data()), 2);
    };
    return bits(a.re()) + bits(a.im());
}

GaussianRational rational_of(long num, long den) {
    return GaussianRational(Rational(num) / den);
}

}  // namespace scv
