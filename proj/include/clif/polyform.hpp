#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clif/scalar.hpp"

namespace clif {

/// Element of the exterior algebra on n <= 4 anticommuting generators
/// e_1..e_n, with complex rational coefficients. A monomial e_{i1..ik}
/// (indices strictly increasing) is stored as the bitmask with bits
/// i1-1..ik-1 set; the empty monomial (mask 0) is the scalar 1.
///
/// This is the spinor space for the creation/annihilation realization:
/// spinors are polyforms, a_i^dagger wedges e_i on the left, a_i contracts.
class Polyform {
public:
    explicit Polyform(int n = 4);

    int generators() const { return n_; }

    static Polyform scalar(int n, const GaussRational& c);
    /// Monomial from a 1-based increasing index list, e.g. {1,3} -> e_13.
    static Polyform monomial(int n, const std::vector<int>& indices,
                             const GaussRational& c = GaussRational(1));

    bool is_zero() const { return terms_.empty(); }

    const GaussRational& coeff(uint8_t mask) const;
    void set_coeff(uint8_t mask, const GaussRational& c);
    const std::map<uint8_t, GaussRational>& terms() const { return terms_; }

    /// Sum of terms of exterior degree k.
    Polyform degree_part(int k) const;
    int max_degree() const;

    Polyform operator-() const;
    Polyform& operator+=(const Polyform& o);
    Polyform& operator-=(const Polyform& o);
    Polyform& operator*=(const GaussRational& s);

    friend Polyform operator+(Polyform a, const Polyform& b) { return a += b; }
    friend Polyform operator-(Polyform a, const Polyform& b) { return a -= b; }
    friend Polyform operator*(Polyform a, const GaussRational& s) { return a *= s; }
    friend Polyform operator*(const GaussRational& s, Polyform a) { return a *= s; }
    friend bool operator==(const Polyform& a, const Polyform& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polyform& a, const Polyform& b) { return !(a == b); }

    std::string str() const;

private:
    int n_;
    std::map<uint8_t, GaussRational> terms_;  // zero coefficients never stored
};

Polyform wedge(const Polyform& a, const Polyform& b);

/// Creation operator a_i^dagger: left exterior multiplication by e_i.
Polyform create(int i, const Polyform& p);

/// Annihilation operator a_i: interior contraction with the dual of e_i.
/// On a monomial containing e_i at (0-based) position k it removes e_i and
/// multiplies by (-1)^k; monomials without e_i are killed.
Polyform annihilate(int i, const Polyform& p);

/// Reversal anti-automorphism: degree-k part scales by (-1)^(k(k-1)/2).
Polyform reverse(const Polyform& p);

/// Complex conjugation of the coefficients only (monomials fixed).
Polyform conj_coeffs(const Polyform& p);

/// Coefficient of the top monomial e_1...e_n in reverse(a) ^ b. This is the
/// fundamental bilinear pairing on spinors.
GaussRational top_pairing(const Polyform& a, const Polyform& b);

/// Coordinates of p in a basis of polyforms; throws if p is outside the
/// span or the basis is degenerate for it.
std::vector<GaussRational> coords_in_basis(const Polyform& p,
                                           const std::vector<Polyform>& basis);

/// Sign of merging two disjoint increasing index sets: (-1)^{#inversions}.
int merge_sign(uint8_t a, uint8_t b);

int popcount_mask(uint8_t m);

}  // namespace clif
