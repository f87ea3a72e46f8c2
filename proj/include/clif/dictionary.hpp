#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clif/clifford.hpp"
#include "clif/composition.hpp"
#include "clif/matrix.hpp"

namespace clif {

/// Interleaved realification (Re z1, Im z1, Re z2, Im z2, ...) used by the
/// quaternionic dictionaries, where the spinor-to-algebra maps are real- but
/// not complex-linear.
std::vector<GaussRational> realify_vec(const std::vector<GaussRational>& v);
std::vector<GaussRational> complexify_vec(const std::vector<GaussRational>& v);
/// Real matrix of a complex-linear operator in the interleaved coordinates.
Matrix realify_linear(const Matrix& m);
/// Real matrix of the antilinear operator v -> m * conj(v).
Matrix realify_antilinear(const Matrix& m);

/// An explicit isomorphism between (one chiral half of) a polyform spinor
/// space and columns over a composition algebra.
///
/// When `realified` is true, `forward` is a real matrix from the interleaved
/// realification of the spinor coordinates to the real algebra coordinates
/// (one algebra element per 2 complex slots); `conj_twist` is then the real
/// matrix through which spinor-coefficient conjugation transports. When
/// false, `forward` is complex, algebra coordinates are complexified, and
/// conjugation transports as x -> conj_twist * conj(x).
struct Dictionary {
    std::string model;
    AlgKind algebra;
    std::string side;  // "plus" or "minus" chirality half
    bool realified = false;
    Matrix forward, backward;
    Matrix conj_twist;
    /// Map from gamma-label coefficients (model label order, quaternionic
    /// models use labels 1..4) to algebra coordinates: the vector x with
    /// x^I Gamma_I acts on algebra columns as [[0, L_qbar], [L_q, 0]] with
    /// q = vector_forward * x.
    Matrix vector_forward;
    /// Complex-model extra data: the matrix taking the 8 octonion-style
    /// coordinates to the 4 complex creation/annihilation coordinates.
    std::optional<Matrix> u_from_alpha;

    /// Algebra elements corresponding to one spinor half. For realified
    /// dictionaries `half` holds the complex chiral coordinates and the
    /// result is a column of real algebra elements; otherwise coordinates
    /// pass through the complex forward matrix.
    std::vector<AlgElement> to_algebra(const std::vector<GaussRational>& half) const;
};

/// C^2 <-> H via u1 = (q4 - i q3)/2, u2 = (q1 + i q2)/2 (4d euclidean model).
Dictionary dict_c2_h();
/// C^2 <-> H' via u1 = (q4 - i q3)/2, u2 = (q1 - i q2)/2 (2+2 model).
Dictionary dict_c2_hsplit();
/// 8d euclidean model: alpha (or beta) coordinates are octonion coordinates.
Dictionary dict_cl8_majorana(int chirality);
/// Split 4+4 model, variant "real" or "complex"; plus chirality.
Dictionary dict_cl44(const std::string& variant);
/// Chiral halves of the 6d models as 2-columns over H (or H').
Dictionary dict_cl6_h2();
Dictionary dict_cl51_h2();
Dictionary dict_cl33_hsplit2();

}  // namespace clif
