#pragma once

#include <map>
#include <string>
#include <vector>

#include "clif/composition.hpp"
#include "clif/form.hpp"
#include "clif/matrix.hpp"
#include "clif/polyform.hpp"

namespace clif {

/// Antilinear operator v -> mat * conj(v).
struct AntilinearOp {
    Matrix mat;

    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;
};

/// Matrix of op composed with itself (a plain linear operator).
Matrix antilinear_square(const AntilinearOp& op);

/// A fully built Clifford algebra model. For the polyform models the spinor
/// space is the span of `basis` (polyforms on n generators) and every matrix
/// is written in the column ordering of that basis, with the even-degree
/// (positive-chirality) basis vectors occupying the first half. For the
/// x:* matrix models the spinor space is a pair of composition-algebra
/// columns and `basis` is empty.
struct CliffordModel {
    std::string name;
    int sig_plus = 0, sig_minus = 0;
    int n_generators = 0;  // polyform models only
    int dim_spinor = 0;
    std::vector<int> labels;  // gamma index labels, canonical order
    std::map<int, int> metric;
    std::map<int, Matrix> gamma;
    std::vector<Polyform> basis;
    Matrix gram;  // gram(m, n) = top_pairing(basis[m], basis[n])
    /// Normalization of the invariant pairing relative to the raw top
    /// pairing (1/2 for the 16-dimensional models, where it makes the
    /// pairing of basis spinors agree with the octonion pairing).
    Rational pair_norm = 1;
    bool has_R = false, has_Rprime = false;
    AntilinearOp R, Rprime;

    bool is_polyform_model() const { return !basis.empty(); }
    int half() const { return dim_spinor / 2; }
};

/// Builds (and caches) a model by name: cl4, cl22, cl6, cl51, cl33, cl8,
/// cl44-real, cl44-complex, x:C, x:C', x:H, x:H', x:O, x:O'.
const CliffordModel& build_model(const std::string& name);
std::vector<std::string> model_names();

struct PairCheck {
    int I, J;
    bool pass;
};
struct CliffordReport {
    std::vector<PairCheck> pairs;
    bool chirality_ok = true;
    bool reality_ok = true;
    bool all_pass() const;
};
/// Exhaustive anticommutator sweep + chirality grading + reality-operator
/// squares; failures are recorded, never thrown.
CliffordReport verify_clifford(const CliffordModel& model);

const AntilinearOp& reality_op(const CliffordModel& model, const std::string& which);

/// Invariant spinor pairing <psi, phi> in model coordinates.
GaussRational spinor_pairing(const CliffordModel& model,
                             const std::vector<GaussRational>& psi,
                             const std::vector<GaussRational>& phi);

/// The k-form with components <psi, Gamma_{I1}...Gamma_{Ik} phi> over
/// strictly increasing label tuples; B_0 is the invariant pairing.
Form bilinear(const CliffordModel& model, int k, const std::vector<GaussRational>& psi,
              const std::vector<GaussRational>& phi);

/// Lie algebra parameters: coefficient of Gamma_I Gamma_J per label pair
/// I < J. For the 8-dimensional models this is the parametrization
/// w^a (Gamma_0 Gamma_a) + w^{ab} (Gamma_a Gamma_b).
using LieParams = std::map<std::pair<int, int>, Rational>;

/// Canonical ordering of the label pairs (the LieParams coordinates).
std::vector<std::pair<int, int>> lie_param_index(const CliffordModel& model);

/// Chiral block (chirality = +1 or -1) of sum w_IJ Gamma_I Gamma_J.
Matrix lie_element(const CliffordModel& model, const LieParams& params, int chirality);

/// Generators of the matrix model over a composition algebra: one
/// off-diagonal generator [[0, L_conj(e_b)], [L_{e_b}, 0]] per basis
/// element, plus the diagonal [[I, 0], [0, -I]] when requested.
std::vector<Matrix> x_model_generators(AlgKind kind, bool include_diagonal);

}  // namespace clif
