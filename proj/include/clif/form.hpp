#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clif/scalar.hpp"

namespace clif {

/// Antisymmetric form on a base space with up to 8 directions, labelled by
/// integers 0..7 (models use whichever labels they need, e.g. 1..6 or 0..7).
/// Distinct from Polyform: Polyform is a spinor (exterior algebra on at most
/// four fermionic generators), Form holds k-form covariants on the base.
class Form {
public:
    Form() = default;

    /// Monomial with an arbitrarily ordered label list; sign-normalized,
    /// zero if a label repeats. E.g. monomial({5,4,1}) = +e^{145}.
    static Form monomial(const std::vector<int>& labels,
                         const GaussRational& c = GaussRational(1));
    static Form scalar(const GaussRational& c);

    bool is_zero() const { return terms_.empty(); }
    const GaussRational& coeff(uint8_t mask) const;
    GaussRational coeff(const std::vector<int>& labels) const;
    void set_coeff(uint8_t mask, const GaussRational& c);
    const std::map<uint8_t, GaussRational>& terms() const { return terms_; }

    Form degree_part(int k) const;

    Form real_part() const;
    Form imag_part() const;
    Form conj_coeffs() const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const GaussRational& s);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const GaussRational& s) { return a *= s; }
    friend Form operator*(const GaussRational& s, Form a) { return a *= s; }
    friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<uint8_t, GaussRational> terms_;  // zero coefficients never stored
};

Form wedge(const Form& a, const Form& b);

/// Interior product with the covector whose component on label i is cov[i].
Form contract(const std::vector<GaussRational>& cov, const Form& t);

/// Hodge dual within the index set `labels` (a mask of base labels) with
/// diagonal metric signs given per label: *e^A = (prod_{a in A} g_a) ·
/// sign(A, complement) · e^complement.
Form hodge_star(const Form& t, uint8_t labels, const std::function<int(int)>& metric);

}  // namespace clif
