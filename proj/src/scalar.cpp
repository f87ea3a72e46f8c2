#include "clif/scalar.hpp"

#include <stdexcept>

namespace clif {

Rational rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // Validate by hand: optional leading '-', digits, optional "/digits".
    size_t pos = 0;
    auto digits = [&](size_t from) {
        size_t p = from;
        if (p < s.size() && s[p] == '-') ++p;
        if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) return from;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        return p;
    };
    pos = digits(0);
    if (pos == 0) return std::nullopt;
    if (pos < s.size()) {
        if (s[pos] != '/') return std::nullopt;
        size_t end = digits(pos + 1);
        if (end == pos + 1 || end != s.size()) return std::nullopt;
        if (s[pos + 1] == '-') return std::nullopt;  // denominator must be positive
    }
    Rational r;
    if (r.set_str(s, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

bool is_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

std::optional<Rational> sqrt_exact(const Rational& r) {
    if (!is_square(r)) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(num, den);
}

Rational GaussRational::norm2() const {
    Rational r = re * re + im * im;
    return r;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    return *this *= inverse(o);
}

GaussRational inverse(const GaussRational& z) {
    if (z.is_zero()) throw std::domain_error("inverse of zero");
    Rational n = z.norm2();
    return {z.re / n, -z.im / n};
}

std::string to_string(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    if (z.re == 0) return to_string(z.im) + "*i";
    std::string s = to_string(z.re);
    if (z.im > 0) s += "+";
    s += to_string(z.im) + "*i";
    return s;
}

}  // namespace clif
