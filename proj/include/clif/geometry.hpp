#pragma once

#include <string>
#include <vector>

#include "clif/clifford.hpp"
#include "clif/composition.hpp"
#include "clif/form.hpp"
#include "clif/matrix.hpp"

namespace clif {

/// Spinor arguments throughout this module are coordinate vectors in the
/// model basis. A vector of full length dim_spinor is taken as is; a vector
/// of half length is interpreted as the positive-chirality half (padded
/// with zeros on the odd half).
std::vector<GaussRational> embed_chiral(const CliffordModel& model,
                                        const std::vector<GaussRational>& psi);

/// Annihilator subspace of a chiral spinor: the kernel of the linear map
/// v -> (sum_I v^I Gamma_I) psi over complexified base vectors, in the
/// canonical label ordering of the model.
struct AnnihilatorReport {
    std::vector<std::vector<GaussRational>> basis;
    int dim = 0;
    /// Dimension of the space of real base vectors annihilating psi.
    int real_index = 0;
};

AnnihilatorReport annihilator(const CliffordModel& model,
                              const std::vector<GaussRational>& psi);

/// Purity: the annihilator has the maximal dimension, half the number of
/// base directions.
bool is_pure(const CliffordModel& model, const std::vector<GaussRational>& psi);

/// Stabilizer subalgebra of a chiral spinor inside the spin Lie algebra,
/// computed as the real kernel of the system lie_element(w) psi = 0 in the
/// LieParams unknowns (one real unknown per label pair, in lie_param_index
/// order).
struct StabilizerReport {
    int dim = 0;
    /// Real kernel basis vectors in lie_param_index coordinates.
    std::vector<std::vector<GaussRational>> kernel;
    /// Best-effort name when the dimension and spinor invariants match a
    /// known case; empty otherwise.
    std::string label;
};

StabilizerReport stabilizer(const CliffordModel& model, const std::vector<GaussRational>& psi);
StabilizerReport joint_stabilizer(const CliffordModel& model,
                                  const std::vector<std::vector<GaussRational>>& psis);

/// The 2-form B_2(psi, phi) together with the endomorphism obtained by
/// raising an index with the model metric, and its classification by exact
/// square: endo is the primitive matrix with leading entry 1, and
/// scale * endo is the raised-index matrix itself.
struct StructureReport {
    Form two_form;
    Matrix endo;
    GaussRational scale;
    /// "complex" (real primitive squaring to a negative multiple of 1),
    /// "paracomplex" (real primitive squaring to a positive multiple), or
    /// "mixed" (genuinely complex with scalar square).
    std::string kind;
};

StructureReport structure_from_pair(const CliffordModel& model,
                                    const std::vector<GaussRational>& psi,
                                    const std::vector<GaussRational>& phi);

/// B_4(psi, phi) over increasing label 4-tuples.
Form four_form(const CliffordModel& model, const std::vector<GaussRational>& psi,
               const std::vector<GaussRational>& phi);

/// The two invariant scalars of a Weyl spinor psi = alpha + i beta of the
/// 16-dimensional models (alpha, beta real spinors in the same chiral
/// half), plus the norm data of the real and imaginary parts.
struct OrbitInvariants {
    GaussRational q_self;  // <psi, psi>
    GaussRational q_R;     // <R(psi), psi> with the coordinate reality operator
    Rational alpha_norm2, beta_norm2, alpha_beta_pairing;
};

struct OrbitReport {
    OrbitInvariants inv;
    std::string label;
};

/// Orbit classification of a chiral spinor of cl8 or the cl44 models. All
/// labels are scale invariant: they depend only on nullity flags and the
/// signs of q_R and of the Gram determinant of {alpha, beta}.
OrbitReport classify_orbit(const CliffordModel& model, const std::vector<GaussRational>& psi);

/// Rational point with c^2 - s^2 = 1 (sign = +1, hyperbola) or
/// c^2 + s^2 = 1 (sign = -1, circle); the constructor-checked relation is
/// c^2 - sign * s^2 = 1.
struct HyperbolicPoint {
    Rational c, s;
    int sign = 1;
};

/// Validates the defining relation; throws std::invalid_argument otherwise.
HyperbolicPoint make_hyperbolic_point(const Rational& c, const Rational& s, int sign);

/// For a unit impure spinor psi (<psi,psi> = 1) with lambda = <R(psi),psi>,
/// returns (lambda psi - R(psi)) / nu where nu^2 = lambda^2 - 1, taking nu
/// rational when lambda^2 > 1 and i * rational when lambda^2 < 1. The sum
/// psi + result is exactly null (hence pure). Throws when lambda = +-1 or
/// when the normalizer is irrational.
std::vector<GaussRational> impure_to_pure(const CliffordModel& model,
                                          const std::vector<GaussRational>& psi);

/// Quaternionic Hopf map: the 6-vector
/// (2(v, L_{e_a} u) for a = 0..3, |u|^2 - |v|^2, |u|^2 + |v|^2),
/// exactly null in the ambient metric (algebra norm signature on the first
/// four slots, then +1, -1). kind must be H or Hsplit and match u, v.
std::vector<GaussRational> hopf_map(AlgKind kind, const AlgElement& u, const AlgElement& v);

/// Residual of the ambient null condition for a hopf_map output; exactly
/// zero for every valid input pair.
GaussRational hopf_null_residual(AlgKind kind, const std::vector<GaussRational>& x);

/// B_3(psi, psi) of a Majorana-Weyl spinor of cl33 and its factorization
/// into three real null directions. The divisor space {v : v wedge T = 0}
/// is computed exactly; T is decomposable iff it is 3-dimensional, and the
/// factors are then a basis of it.
struct B3Report {
    Form three_form;
    bool decomposable = false;
    std::vector<std::vector<GaussRational>> factors;
};

B3Report b3_decomposability(const CliffordModel& model, const std::vector<GaussRational>& psi);

}  // namespace clif
