#include "clif/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace clif {

namespace {

bool vec_is_zero(const std::vector<GaussRational>& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussRational& z) { return z.is_zero(); });
}

void require_nonzero(const std::vector<GaussRational>& v) {
    if (vec_is_zero(v)) throw std::invalid_argument("zero spinor");
}

/// The chiral half coordinates: accepts either a half-length vector or a
/// full one whose odd half vanishes.
std::vector<GaussRational> chiral_half(const CliffordModel& m,
                                       const std::vector<GaussRational>& psi) {
    size_t h = m.half();
    if (psi.size() == h) return psi;
    if (psi.size() != size_t(m.dim_spinor)) throw std::invalid_argument("spinor size mismatch");
    for (size_t i = h; i < psi.size(); ++i)
        if (!psi[i].is_zero())
            throw std::invalid_argument("expected a positive-chirality spinor");
    return std::vector<GaussRational>(psi.begin(), psi.begin() + h);
}

/// The antilinear operator acting as plain coefficient conjugation in the
/// model basis coordinates (the reality condition of the 16-dimensional
/// models).
const AntilinearOp& coordinate_reality_op(const CliffordModel& m) {
    if (m.name == "cl44-complex") return m.Rprime;
    if (m.has_R) return m.R;
    throw std::invalid_argument("model has no reality operator: " + m.name);
}

AlgKind model_algebra(const CliffordModel& m) {
    if (m.name == "cl8") return AlgKind::O;
    if (m.name == "cl44-real" || m.name == "cl44-complex") return AlgKind::Osplit;
    throw std::invalid_argument("orbit classification is only defined for cl8/cl44 models");
}

OrbitInvariants orbit_invariants(const CliffordModel& m, const std::vector<GaussRational>& full,
                                 const std::vector<GaussRational>& half) {
    OrbitInvariants inv;
    inv.q_self = spinor_pairing(m, full, full);
    inv.q_R = spinor_pairing(m, coordinate_reality_op(m).apply(full), full);
    const CompAlgebra& alg = make_algebra(model_algebra(m));
    inv.alpha_norm2 = inv.beta_norm2 = inv.alpha_beta_pairing = 0;
    for (size_t a = 0; a < half.size(); ++a) {
        Rational g(alg.norm_signature[a]);
        inv.alpha_norm2 += g * half[a].re * half[a].re;
        inv.beta_norm2 += g * half[a].im * half[a].im;
        inv.alpha_beta_pairing += g * half[a].re * half[a].im;
    }
    return inv;
}

bool parts_parallel(const std::vector<GaussRational>& half) {
    Matrix two(2, half.size());
    for (size_t a = 0; a < half.size(); ++a) {
        two(0, a) = GaussRational(half[a].re);
        two(1, a) = GaussRational(half[a].im);
    }
    return rank(two) <= 1;
}

std::string stabilizer_label(const CliffordModel& m, const std::vector<GaussRational>& psi,
                             int dim) {
    if (m.name != "cl8" && m.name != "cl44-real" && m.name != "cl44-complex") return "";
    std::string orbit = classify_orbit(m, psi).label;
    if (orbit == "majorana-direction") return "spin(7)";
    if (m.name == "cl8") return "su(4)";
    if (orbit == "pure-complex-type" || orbit == "case-1-su22" || orbit == "case-3-su22")
        return "su(2,2)";
    if (orbit == "pure-paracomplex-type" || orbit == "case-2-sl4r")
        return dim == 21 ? "sl(4,R)-semidirect" : "sl(4,R)";
    if (orbit == "case-4-beta-null" || orbit == "case-5-alpha-null") return "null-part";
    if (orbit == "pure-mixed-type") return "mixed";
    return "";
}

/// Rows of the real stabilizer system of one spinor: real and imaginary
/// parts of lie_element(w_p) psi, one column per Lie parameter.
Matrix stabilizer_system(const CliffordModel& m, const std::vector<GaussRational>& half) {
    auto index = lie_param_index(m);
    Matrix sys(half.size(), index.size());
    for (size_t p = 0; p < index.size(); ++p) {
        LieParams w{{index[p], Rational(1)}};
        sys.set_col(p, lie_element(m, w, +1).apply(half));
    }
    return realified_rows(sys);
}

Matrix stack_rows(const std::vector<Matrix>& blocks) {
    size_t rows = 0, cols = blocks.at(0).cols();
    for (const Matrix& b : blocks) rows += b.rows();
    Matrix out(rows, cols);
    size_t r0 = 0;
    for (const Matrix& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return out;
}

}  // namespace

std::vector<GaussRational> embed_chiral(const CliffordModel& m,
                                        const std::vector<GaussRational>& psi) {
    if (psi.size() == size_t(m.dim_spinor)) return psi;
    if (psi.size() != size_t(m.half())) throw std::invalid_argument("spinor size mismatch");
    std::vector<GaussRational> full(m.dim_spinor);
    std::copy(psi.begin(), psi.end(), full.begin());
    return full;
}

AnnihilatorReport annihilator(const CliffordModel& m, const std::vector<GaussRational>& psi) {
    require_nonzero(psi);
    std::vector<GaussRational> full = embed_chiral(m, psi);
    Matrix sys(m.dim_spinor, m.labels.size());
    for (size_t p = 0; p < m.labels.size(); ++p) sys.set_col(p, m.gamma.at(m.labels[p]).apply(full));
    AnnihilatorReport rep;
    rep.basis = kernel_basis(sys);
    rep.dim = int(rep.basis.size());
    rep.real_index = int(m.labels.size() - rank(realified_rows(sys)));
    return rep;
}

bool is_pure(const CliffordModel& m, const std::vector<GaussRational>& psi) {
    return annihilator(m, psi).dim == int(m.labels.size()) / 2;
}

StabilizerReport stabilizer(const CliffordModel& m, const std::vector<GaussRational>& psi) {
    return joint_stabilizer(m, {psi});
}

StabilizerReport joint_stabilizer(const CliffordModel& m,
                                  const std::vector<std::vector<GaussRational>>& psis) {
    if (psis.empty()) throw std::invalid_argument("empty spinor list");
    std::vector<Matrix> blocks;
    for (const auto& psi : psis) {
        require_nonzero(psi);
        blocks.push_back(stabilizer_system(m, chiral_half(m, psi)));
    }
    StabilizerReport rep;
    rep.kernel = kernel_basis(stack_rows(blocks));
    rep.dim = int(rep.kernel.size());
    if (psis.size() == 1)
        rep.label = stabilizer_label(m, psis.front(), rep.dim);
    else if (rep.dim == 6)
        rep.label = "mixed-6";
    return rep;
}

StructureReport structure_from_pair(const CliffordModel& m,
                                    const std::vector<GaussRational>& psi,
                                    const std::vector<GaussRational>& phi) {
    StructureReport rep;
    rep.two_form = bilinear(m, 2, embed_chiral(m, psi), embed_chiral(m, phi));
    if (rep.two_form.is_zero()) throw std::domain_error("degenerate pair: B2 vanishes");
    size_t n = m.labels.size();
    // raise an index: J^I_K = g^{II} F_{KI}
    Matrix J(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            J(i, k) = GaussRational(Rational(m.metric.at(m.labels[i]))) *
                      rep.two_form.coeff({m.labels[k], m.labels[i]});
    rep.scale = GaussRational(0);
    for (size_t i = 0; i < n && rep.scale.is_zero(); ++i)
        for (size_t k = 0; k < n && rep.scale.is_zero(); ++k) rep.scale = J(i, k);
    rep.endo = J * inverse(rep.scale);
    Matrix sq = rep.endo * rep.endo;
    GaussRational t = sq(0, 0);
    if (sq != Matrix::identity(n) * t || t.is_zero())
        throw std::domain_error("B2 endomorphism does not square to a scalar");
    if (rep.endo.is_real())
        rep.kind = (t.is_real() && t.re < 0) ? "complex" : "paracomplex";
    else
        rep.kind = "mixed";
    return rep;
}

Form four_form(const CliffordModel& m, const std::vector<GaussRational>& psi,
               const std::vector<GaussRational>& phi) {
    return bilinear(m, 4, embed_chiral(m, psi), embed_chiral(m, phi));
}

OrbitReport classify_orbit(const CliffordModel& m, const std::vector<GaussRational>& psi) {
    require_nonzero(psi);
    std::vector<GaussRational> full = embed_chiral(m, psi);
    std::vector<GaussRational> half = chiral_half(m, psi);
    OrbitReport rep;
    rep.inv = orbit_invariants(m, full, half);
    const OrbitInvariants& v = rep.inv;
    // Gram determinant of {alpha, beta}: invariant sign under complex
    // rescaling of the spinor.
    Rational gram = v.alpha_norm2 * v.beta_norm2 - v.alpha_beta_pairing * v.alpha_beta_pairing;
    if (m.name == "cl8") {
        if (v.q_self.is_zero())
            rep.label = "pure";
        else if (gram == 0)
            rep.label = "majorana-direction";
        else
            rep.label = "generic-su4";
        return rep;
    }
    if (v.q_self.is_zero()) {
        switch (annihilator(m, full).real_index) {
            case 4: rep.label = "pure-paracomplex-type"; break;
            case 2: rep.label = "pure-mixed-type"; break;
            case 0: rep.label = "pure-complex-type"; break;
            default: rep.label = "pure"; break;
        }
    } else if (parts_parallel(half)) {
        rep.label = "majorana-direction";
    } else if (gram > 0) {
        rep.label = (v.q_R.re > 0) ? "case-1-su22" : "case-3-su22";
    } else if (gram < 0) {
        rep.label = "case-2-sl4r";
    } else if (v.beta_norm2 == 0) {
        rep.label = "case-4-beta-null";
    } else if (v.alpha_norm2 == 0) {
        rep.label = "case-5-alpha-null";
    } else {
        rep.label = "degenerate";
    }
    return rep;
}

HyperbolicPoint make_hyperbolic_point(const Rational& c, const Rational& s, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (c * c - Rational(sign) * s * s != 1)
        throw std::invalid_argument("c^2 - sign*s^2 = 1 violated");
    return HyperbolicPoint{c, s, sign};
}

std::vector<GaussRational> impure_to_pure(const CliffordModel& m,
                                          const std::vector<GaussRational>& psi) {
    require_nonzero(psi);
    std::vector<GaussRational> full = embed_chiral(m, psi);
    if (spinor_pairing(m, full, full) != GaussRational(1))
        throw std::invalid_argument("impure_to_pure requires a unit spinor");
    std::vector<GaussRational> rfull = coordinate_reality_op(m).apply(full);
    GaussRational lam = spinor_pairing(m, rfull, full);
    if (!lam.is_real()) throw std::domain_error("<R(psi),psi> is not real");
    Rational disc = lam.re * lam.re - 1;
    if (disc == 0) throw std::domain_error("lambda = +-1: construction not applicable");
    GaussRational nu;
    if (disc > 0) {
        auto root = sqrt_exact(disc);
        if (!root) throw std::domain_error("irrational normalizer sqrt(lambda^2-1)");
        nu = GaussRational(*root);
    } else {
        auto root = sqrt_exact(-disc);
        if (!root) throw std::domain_error("irrational normalizer sqrt(1-lambda^2)");
        nu = GaussRational(Rational(0), *root);
    }
    std::vector<GaussRational> out(full.size());
    for (size_t i = 0; i < full.size(); ++i) out[i] = (lam * full[i] - rfull[i]) / nu;
    if (psi.size() == out.size()) return out;
    return std::vector<GaussRational>(out.begin(), out.begin() + psi.size());
}

std::vector<GaussRational> hopf_map(AlgKind kind, const AlgElement& u, const AlgElement& v) {
    if (kind != AlgKind::H && kind != AlgKind::Hsplit)
        throw std::invalid_argument("hopf_map needs a quaternion algebra");
    if (u.kind != kind || v.kind != kind) throw std::invalid_argument("algebra mismatch");
    std::vector<GaussRational> x(6);
    for (int a = 0; a < 4; ++a)
        x[a] = GaussRational(2) * pairing(v, mul(AlgElement::basis(kind, a), u));
    x[4] = norm2(u) - norm2(v);
    x[5] = norm2(u) + norm2(v);
    return x;
}

GaussRational hopf_null_residual(AlgKind kind, const std::vector<GaussRational>& x) {
    const CompAlgebra& alg = make_algebra(kind);
    if (x.size() != 6) throw std::invalid_argument("hopf vector has six components");
    GaussRational s;
    for (int a = 0; a < 4; ++a) s += GaussRational(Rational(alg.norm_signature[a])) * x[a] * x[a];
    return s + x[4] * x[4] - x[5] * x[5];
}

B3Report b3_decomposability(const CliffordModel& m, const std::vector<GaussRational>& psi) {
    if (m.name != "cl33") throw std::invalid_argument("B3 factorization is a cl33 construction");
    require_nonzero(psi);
    std::vector<GaussRational> full = embed_chiral(m, psi);
    std::vector<GaussRational> rfull = m.Rprime.apply(full);
    if (rfull != full) throw std::invalid_argument("spinor is not Majorana-Weyl");
    B3Report rep;
    rep.three_form = bilinear(m, 3, full, full);
    if (rep.three_form.is_zero()) return rep;
    // divisor space: kernel of v -> v wedge T, mapping R^6 into 4-forms
    std::vector<uint8_t> masks4;
    for (int mask = 0; mask < 256; ++mask) {
        if (popcount_mask(uint8_t(mask)) != 4) continue;
        bool ok = true;
        for (int bit = 0; bit < 8 && ok; ++bit)
            if ((mask >> bit) & 1)
                ok = std::find(m.labels.begin(), m.labels.end(), bit) != m.labels.end();
        if (ok) masks4.push_back(uint8_t(mask));
    }
    Matrix sys(masks4.size(), m.labels.size());
    for (size_t p = 0; p < m.labels.size(); ++p) {
        Form w = wedge(Form::monomial({m.labels[p]}), rep.three_form);
        for (size_t r = 0; r < masks4.size(); ++r) sys(r, p) = w.coeff(masks4[r]);
    }
    rep.factors = kernel_basis(sys);
    rep.decomposable = rep.factors.size() == 3;
    if (!rep.decomposable) rep.factors.clear();
    return rep;
}

}  // namespace clif
