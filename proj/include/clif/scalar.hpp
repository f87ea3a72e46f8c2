#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace clif {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (gmp keeps the canonical form for us).
using Rational = mpq_class;

Rational rat(long num, long den = 1);

/// Parses "p/q" or "p". Returns nullopt on malformed input or q = 0.
std::optional<Rational> parse_rational(const std::string& s);

/// Canonical string form: "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);

/// True iff r is the square of a rational, i.e. numerator and denominator
/// are both perfect squares.
bool is_square(const Rational& r);

/// Exact square root of a nonnegative perfect-square rational.
std::optional<Rational> sqrt_exact(const Rational& r);

/// Exact complex scalar a + i*b with rational parts. This is the base field
/// for all linear algebra in the library; the imaginary unit here is the
/// scalar "i", not a quaternion unit.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(long r, long i) : re(r), im(i) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }
    /// re^2 + im^2, zero iff the value is zero.
    Rational norm2() const;

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

/// Multiplicative inverse; undefined behaviour on zero is avoided by an
/// explicit check that throws std::domain_error.
GaussRational inverse(const GaussRational& z);

std::string to_string(const GaussRational& z);

}  // namespace clif
