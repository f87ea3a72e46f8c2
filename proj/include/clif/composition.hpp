#pragma once

#include <array>
#include <string>
#include <vector>

#include "clif/form.hpp"
#include "clif/matrix.hpp"
#include "clif/scalar.hpp"

namespace clif {

enum class AlgKind { C, Csplit, H, Hsplit, O, Osplit };

AlgKind parse_alg_kind(const std::string& name);  // throws on unknown name
std::string alg_kind_name(AlgKind k);

/// Composition algebra given by its basis multiplication table. Basis index
/// 0 is the identity; a product of two basis elements is always +/- a single
/// basis element, stored as {sign, index}.
struct CompAlgebra {
    AlgKind kind;
    int dim;  // 2, 4 or 8
    bool split;
    /// table[a][b] = {sign, c} meaning e_a e_b = sign * e_c.
    std::vector<std::vector<std::pair<int, int>>> table;
    /// Diagonal of the norm form: norm2(x) = sum_a norm_signature[a] * x_a^2.
    std::vector<int> norm_signature;

    std::string basis_name(int a) const;
};

const CompAlgebra& make_algebra(AlgKind kind);

/// The 3-form encoding the imaginary octonion products, on labels 1..7.
Form octonion_three_form(bool split);

/// Element with GaussRational coordinates; real elements have zero imaginary
/// parts, complexified elements are general.
struct AlgElement {
    AlgKind kind;
    std::vector<GaussRational> coords;

    AlgElement(AlgKind k, std::vector<GaussRational> c) : kind(k), coords(std::move(c)) {}
    static AlgElement zero(AlgKind k);
    static AlgElement basis(AlgKind k, int index);
    static AlgElement identity(AlgKind k) { return basis(k, 0); }

    bool is_zero() const;
    bool is_real() const;

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const GaussRational& s);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(AlgElement a, const GaussRational& s) { return a *= s; }
    friend AlgElement operator*(const GaussRational& s, AlgElement a) { return a *= s; }
    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.kind == b.kind && a.coords == b.coords;
    }
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

    std::string str() const;
};

AlgElement mul(const AlgElement& x, const AlgElement& y);
AlgElement conj(const AlgElement& x);
/// Bilinear (not hermitian) extension of the norm form.
GaussRational norm2(const AlgElement& x);
GaussRational pairing(const AlgElement& x, const AlgElement& y);
bool is_null(const AlgElement& x);

Matrix left_mult_matrix(const AlgElement& x);
Matrix right_mult_matrix(const AlgElement& x);

}  // namespace clif
