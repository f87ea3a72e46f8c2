#include "clif/clifford.hpp"

#include <stdexcept>

namespace clif {

std::vector<GaussRational> AntilinearOp::apply(const std::vector<GaussRational>& v) const {
    std::vector<GaussRational> cv(v.size());
    for (size_t i = 0; i < v.size(); ++i) cv[i] = v[i].conj();
    return mat.apply(cv);
}

Matrix antilinear_square(const AntilinearOp& op) { return op.mat * op.mat.conj(); }

namespace {

// A gamma operator on polyforms: c_create * a_gen^dagger + c_ann * a_gen.
struct GammaDef {
    int gen;
    GaussRational c_create, c_ann;
};

Polyform apply_gamma(const GammaDef& g, const Polyform& p) {
    return g.c_create * create(g.gen, p) + g.c_ann * annihilate(g.gen, p);
}

const GaussRational kI = GaussRational::i();

struct ModelSpec {
    int n;
    std::vector<int> labels;
    std::map<int, GammaDef> defs;
    std::map<int, int> metric;
    std::vector<std::vector<std::vector<int>>> even_basis;  // signed monomial lists
    std::vector<std::vector<std::vector<int>>> odd_basis;
    std::vector<GaussRational> even_coeffs, odd_coeffs;  // per basis element prefactor
    bool has_R = false, has_Rprime = false;
    std::vector<int> R_labels, Rprime_labels;
    Rational pair_norm = 1;
};

// Builds one basis polyform from a prefactor and a list of signed monomials:
// each entry is a 1-based index list, possibly unordered (the exterior sign
// is computed), with an optional leading 0 meaning "minus this monomial".
Polyform build_basis_elt(int n, const GaussRational& pre,
                         const std::vector<std::vector<int>>& monos) {
    Polyform p(n);
    for (auto mono : monos) {
        GaussRational c = pre;
        if (!mono.empty() && mono.front() == 0) {
            c = -c;
            mono.erase(mono.begin());
        }
        Polyform term = Polyform::scalar(n, c);
        for (int idx : mono) term = wedge(term, Polyform::monomial(n, {idx}));
        p += term;
    }
    return p;
}

constexpr int kNeg = 0;  // leading marker inside a monomial list: negate it

ModelSpec spec_cl4() {
    ModelSpec s;
    s.n = 2;
    s.labels = {1, 2, 3, 4};
    s.defs[4] = {1, 1, 1};
    s.defs[3] = {1, -kI, kI};
    s.defs[2] = {2, 1, 1};
    s.defs[1] = {2, -kI, kI};
    for (int l : s.labels) s.metric[l] = 1;
    // columns (u1, u2 | v1, v2) = (1, e12 | e1, e2)
    s.even_basis = {{{}}, {{1, 2}}};
    s.odd_basis = {{{1}}, {{2}}};
    s.even_coeffs = {1, 1};
    s.odd_coeffs = {1, 1};
    s.has_R = s.has_Rprime = true;
    s.R_labels = {2, 4};
    s.Rprime_labels = {3, 1};
    return s;
}

ModelSpec spec_cl22() {
    ModelSpec s = spec_cl4();
    s.defs[2] = {2, -kI, -kI};
    s.defs[1] = {2, 1, -1};
    s.metric[1] = s.metric[2] = -1;
    s.R_labels = {4, 1};
    s.Rprime_labels = {2, 3};
    return s;
}

ModelSpec spec_cl6() {
    ModelSpec s;
    s.n = 3;
    s.labels = {1, 2, 3, 4, 5, 6};
    s.defs[4] = {1, 1, 1};
    s.defs[3] = {1, -kI, kI};
    s.defs[2] = {2, 1, 1};
    s.defs[1] = {2, -kI, kI};
    s.defs[5] = {3, 1, 1};
    s.defs[6] = {3, -kI, kI};
    for (int l : s.labels) s.metric[l] = 1;
    // columns (u1, u2, v1, v2 | u~1, u~2, v~1, v~2)
    s.even_basis = {{{}}, {{1, 2}}, {{1, 3}}, {{2, 3}}};
    s.odd_basis = {{{3}}, {{1, 2, 3}}, {{1}}, {{2}}};
    s.even_coeffs = {1, 1, 1, 1};
    s.odd_coeffs = {1, 1, 1, 1};
    s.has_Rprime = true;
    s.Rprime_labels = {3, 1, 6};
    return s;
}

ModelSpec spec_cl51() {
    ModelSpec s = spec_cl6();
    s.defs[6] = {3, -1, 1};
    s.metric[6] = -1;
    s.has_R = true;
    s.R_labels = {2, 4, 5, 6};
    s.Rprime_labels = {3, 1};
    return s;
}

ModelSpec spec_cl33() {
    ModelSpec s = spec_cl6();
    s.defs[2] = {2, -kI, -kI};
    s.defs[1] = {2, 1, -1};
    s.defs[6] = {3, -1, 1};
    s.metric[1] = s.metric[2] = s.metric[6] = -1;
    s.has_R = false;
    s.Rprime_labels = {2, 3};
    return s;
}

ModelSpec spec_cl8() {
    ModelSpec s;
    s.n = 4;
    s.labels = {0, 1, 2, 3, 4, 5, 6, 7};
    s.defs[0] = {4, 1, 1};
    s.defs[5] = {1, 1, 1};
    s.defs[6] = {2, 1, 1};
    s.defs[7] = {3, 1, 1};
    for (int a = 1; a <= 4; ++a) s.defs[a] = {a, -kI, kI};
    for (int l : s.labels) s.metric[l] = 1;
    // columns (alpha_0..alpha_7 | beta_0..beta_7)
    s.even_basis = {{{}, {4, 1, 2, 3}},         {{4, 1}, {2, 3}},
                    {{4, 2}, {3, 1}},           {{4, 3}, {1, 2}},
                    {{}, {kNeg, 4, 1, 2, 3}},   {{4, 1}, {kNeg, 2, 3}},
                    {{4, 2}, {kNeg, 3, 1}},     {{4, 3}, {kNeg, 1, 2}}};
    s.even_coeffs = {kI, 1, 1, 1, 1, kI, kI, kI};
    s.odd_basis = {{{4}, {1, 2, 3}},         {{1}, {4, 2, 3}},
                   {{2}, {4, 3, 1}},         {{3}, {4, 1, 2}},
                   {{4}, {kNeg, 1, 2, 3}},   {{1}, {kNeg, 4, 2, 3}},
                   {{2}, {kNeg, 4, 3, 1}},   {{3}, {kNeg, 4, 1, 2}}};
    s.odd_coeffs = {kI, 1, 1, 1, 1, kI, kI, kI};
    s.has_R = true;
    s.R_labels = {1, 2, 3, 4};
    s.pair_norm = rat(1, 2);
    return s;
}

ModelSpec spec_cl44_real() {
    ModelSpec s;
    s.n = 4;
    s.labels = {0, 1, 2, 3, 4, 5, 6, 7};
    s.defs[0] = {4, 1, 1};
    s.defs[1] = {1, 1, 1};
    s.defs[2] = {2, 1, 1};
    s.defs[3] = {3, 1, 1};
    s.defs[4] = {4, 1, -1};
    s.defs[5] = {1, 1, -1};
    s.defs[6] = {2, 1, -1};
    s.defs[7] = {3, 1, -1};
    for (int l : s.labels) s.metric[l] = (l <= 3) ? 1 : -1;
    s.even_basis = {{{}, {4, 1, 2, 3}},       {{4, 1}, {kNeg, 2, 3}},
                    {{4, 2}, {kNeg, 3, 1}},   {{4, 3}, {kNeg, 1, 2}},
                    {{}, {kNeg, 4, 1, 2, 3}}, {{4, 1}, {2, 3}},
                    {{4, 2}, {3, 1}},         {{4, 3}, {1, 2}}};
    s.even_coeffs = {1, 1, 1, 1, 1, 1, 1, 1};
    s.odd_basis = {{{4}, {1, 2, 3}},         {{1}, {kNeg, 4, 2, 3}},
                   {{2}, {kNeg, 4, 3, 1}},   {{3}, {kNeg, 4, 1, 2}},
                   {{4}, {kNeg, 1, 2, 3}},   {{1}, {4, 2, 3}},
                   {{2}, {4, 3, 1}},         {{3}, {4, 1, 2}}};
    s.odd_coeffs = {1, 1, 1, 1, 1, 1, 1, 1};
    s.has_R = true;
    s.R_labels = {};  // plain complex conjugation
    // this basis pairs with the opposite overall sign; normalize so that the
    // invariant pairing of basis spinors is the split octonion norm form
    s.pair_norm = rat(-1, 2);
    return s;
}

ModelSpec spec_cl44_complex() {
    ModelSpec s;
    s.n = 4;
    s.labels = {0, 1, 2, 3, 4, 5, 6, 7};
    s.defs[0] = {4, 1, 1};
    s.defs[3] = {4, kI, -kI};
    s.defs[2] = {3, 1, 1};
    s.defs[1] = {3, kI, -kI};
    s.defs[4] = {2, kI, kI};
    s.defs[7] = {2, 1, -1};
    s.defs[6] = {1, kI, kI};
    s.defs[5] = {1, 1, -1};
    for (int l : s.labels) s.metric[l] = (l <= 3) ? 1 : -1;
    s.even_basis = {{{}, {kNeg, 4, 1, 2, 3}}, {{4, 3}, {kNeg, 1, 2}},
                    {{4, 3}, {1, 2}},         {{}, {4, 1, 2, 3}},
                    {{4, 2}, {3, 1}},         {{4, 1}, {kNeg, 2, 3}},
                    {{4, 1}, {2, 3}},         {{4, 2}, {kNeg, 3, 1}}};
    s.even_coeffs = {1, kI, 1, kI, kI, 1, kI, 1};
    s.odd_basis = {{{4}, {kNeg, 1, 2, 3}},   {{3}, {kNeg, 4, 1, 2}},
                   {{3}, {4, 1, 2}},         {{4}, {1, 2, 3}},
                   {{2}, {4, 3, 1}},         {{1}, {kNeg, 4, 2, 3}},
                   {{1}, {4, 2, 3}},         {{2}, {kNeg, 4, 3, 1}}};
    s.odd_coeffs = {1, kI, 1, kI, kI, 1, kI, 1};
    s.has_R = s.has_Rprime = true;
    s.R_labels = {0, 2, 5, 7};        // product of the real gamma operators
    s.Rprime_labels = {3, 1, 4, 6};   // product of the imaginary ones
    s.pair_norm = rat(1, 2);
    return s;
}

CliffordModel build_polyform_model(const std::string& name, const ModelSpec& s) {
    CliffordModel m;
    m.name = name;
    m.n_generators = s.n;
    m.dim_spinor = 1 << s.n;
    m.labels = s.labels;
    m.metric = s.metric;
    m.pair_norm = s.pair_norm;
    for (auto [l, g] : m.metric) (g > 0 ? m.sig_plus : m.sig_minus)++;

    for (size_t a = 0; a < s.even_basis.size(); ++a)
        m.basis.push_back(build_basis_elt(s.n, s.even_coeffs[a], s.even_basis[a]));
    for (size_t a = 0; a < s.odd_basis.size(); ++a)
        m.basis.push_back(build_basis_elt(s.n, s.odd_coeffs[a], s.odd_basis[a]));
    if (m.basis.size() != size_t(m.dim_spinor))
        throw std::logic_error("basis size mismatch for " + name);

    for (int l : s.labels) {
        Matrix g(m.dim_spinor, m.dim_spinor);
        for (int j = 0; j < m.dim_spinor; ++j)
            g.set_col(j, coords_in_basis(apply_gamma(s.defs.at(l), m.basis[j]), m.basis));
        m.gamma[l] = std::move(g);
    }

    m.gram = Matrix(m.dim_spinor, m.dim_spinor);
    for (int i = 0; i < m.dim_spinor; ++i)
        for (int j = 0; j < m.dim_spinor; ++j)
            m.gram(i, j) = top_pairing(m.basis[i], m.basis[j]);

    // Coordinate matrix of coefficient conjugation on polyforms.
    Matrix conj_mat(m.dim_spinor, m.dim_spinor);
    for (int j = 0; j < m.dim_spinor; ++j)
        conj_mat.set_col(j, coords_in_basis(conj_coeffs(m.basis[j]), m.basis));
    auto reality = [&](const std::vector<int>& gamma_labels) {
        Matrix r = conj_mat;
        for (auto it = gamma_labels.rbegin(); it != gamma_labels.rend(); ++it)
            r = m.gamma.at(*it) * r;
        return AntilinearOp{std::move(r)};
    };
    m.has_R = s.has_R;
    m.has_Rprime = s.has_Rprime;
    if (s.has_R) m.R = reality(s.R_labels);
    if (s.has_Rprime) m.Rprime = reality(s.Rprime_labels);
    return m;
}

CliffordModel build_x_model(const std::string& name, AlgKind kind) {
    const CompAlgebra& alg = make_algebra(kind);
    CliffordModel m;
    m.name = name;
    m.dim_spinor = 2 * alg.dim;
    std::vector<Matrix> gens = x_model_generators(kind, true);
    for (int b = 0; b < alg.dim; ++b) {
        m.labels.push_back(b);
        m.metric[b] = alg.norm_signature[b];
        m.gamma[b] = gens[b];
    }
    m.labels.push_back(alg.dim);
    m.metric[alg.dim] = 1;
    m.gamma[alg.dim] = gens[alg.dim];
    for (auto [l, g] : m.metric) (g > 0 ? m.sig_plus : m.sig_minus)++;
    return m;
}

}  // namespace

std::vector<std::string> model_names() {
    return {"cl4",  "cl22", "cl6",  "cl51", "cl33", "cl8",  "cl44-real",
            "cl44-complex", "x:C",  "x:C'", "x:H",  "x:H'", "x:O",  "x:O'"};
}

const CliffordModel& build_model(const std::string& name) {
    static std::map<std::string, CliffordModel> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    CliffordModel m;
    if (name == "cl4")
        m = build_polyform_model(name, spec_cl4());
    else if (name == "cl22")
        m = build_polyform_model(name, spec_cl22());
    else if (name == "cl6")
        m = build_polyform_model(name, spec_cl6());
    else if (name == "cl51")
        m = build_polyform_model(name, spec_cl51());
    else if (name == "cl33")
        m = build_polyform_model(name, spec_cl33());
    else if (name == "cl8")
        m = build_polyform_model(name, spec_cl8());
    else if (name == "cl44-real")
        m = build_polyform_model(name, spec_cl44_real());
    else if (name == "cl44-complex")
        m = build_polyform_model(name, spec_cl44_complex());
    else if (name.rfind("x:", 0) == 0)
        m = build_x_model(name, parse_alg_kind(name.substr(2)));
    else
        throw std::invalid_argument("unknown model: " + name);
    return cache.emplace(name, std::move(m)).first->second;
}

bool CliffordReport::all_pass() const {
    if (!chirality_ok || !reality_ok) return false;
    for (const auto& p : pairs)
        if (!p.pass) return false;
    return true;
}

CliffordReport verify_clifford(const CliffordModel& m) {
    CliffordReport rep;
    size_t d = m.dim_spinor;
    for (size_t a = 0; a < m.labels.size(); ++a)
        for (size_t b = a; b < m.labels.size(); ++b) {
            int I = m.labels[a], J = m.labels[b];
            Matrix anti = m.gamma.at(I) * m.gamma.at(J) + m.gamma.at(J) * m.gamma.at(I);
            Matrix expect =
                (I == J) ? Matrix::identity(d) * GaussRational(2 * m.metric.at(I)) : Matrix(d, d);
            rep.pairs.push_back({I, J, anti == expect});
        }
    // gamma operators of the polyform models must exchange the two chiral
    // halves (the x:* models carry a block-diagonal generator, so the grading
    // statement does not apply there)
    size_t h = d / 2;
    for (int l : m.is_polyform_model() ? m.labels : std::vector<int>{}) {
        const Matrix& g = m.gamma.at(l);
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < h; ++j)
                if (!g(i, j).is_zero() || !g(i + h, j + h).is_zero()) rep.chirality_ok = false;
    }
    // reality operators square to +/- identity
    for (const AntilinearOp* op : {m.has_R ? &m.R : nullptr, m.has_Rprime ? &m.Rprime : nullptr}) {
        if (!op) continue;
        Matrix sq = antilinear_square(*op);
        if (sq != Matrix::identity(d) && sq != -Matrix::identity(d)) rep.reality_ok = false;
    }
    return rep;
}

const AntilinearOp& reality_op(const CliffordModel& m, const std::string& which) {
    if (which == "R") {
        if (!m.has_R) throw std::invalid_argument("model " + m.name + " has no operator R");
        return m.R;
    }
    if (which == "Rprime" || which == "R'") {
        if (!m.has_Rprime)
            throw std::invalid_argument("model " + m.name + " has no operator R'");
        return m.Rprime;
    }
    throw std::invalid_argument("unknown reality operator: " + which);
}

GaussRational spinor_pairing(const CliffordModel& m, const std::vector<GaussRational>& psi,
                             const std::vector<GaussRational>& phi) {
    if (!m.is_polyform_model())
        throw std::invalid_argument("pairing needs a polyform model");
    if (psi.size() != size_t(m.dim_spinor) || phi.size() != size_t(m.dim_spinor))
        throw std::invalid_argument("spinor size mismatch");
    GaussRational s;
    for (int i = 0; i < m.dim_spinor; ++i) {
        if (psi[i].is_zero()) continue;
        for (int j = 0; j < m.dim_spinor; ++j) s += psi[i] * m.gram(i, j) * phi[j];
    }
    return s * GaussRational(m.pair_norm);
}

Form bilinear(const CliffordModel& m, int k, const std::vector<GaussRational>& psi,
              const std::vector<GaussRational>& phi) {
    if (k < 0 || k > int(m.labels.size())) throw std::invalid_argument("bad form degree");
    Form out;
    // iterate over strictly increasing k-tuples of label positions
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<GaussRational> w = phi;
        std::vector<int> lab(k);
        for (int i = k - 1; i >= 0; --i) {
            lab[i] = m.labels[pick[i]];
            w = m.gamma.at(lab[i]).apply(w);
        }
        GaussRational comp = spinor_pairing(m, psi, w);
        if (!comp.is_zero()) out += Form::monomial(lab, comp);
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[i] == int(m.labels.size()) - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<std::pair<int, int>> lie_param_index(const CliffordModel& m) {
    std::vector<std::pair<int, int>> idx;
    for (size_t a = 0; a < m.labels.size(); ++a)
        for (size_t b = a + 1; b < m.labels.size(); ++b)
            idx.emplace_back(m.labels[a], m.labels[b]);
    return idx;
}

Matrix lie_element(const CliffordModel& m, const LieParams& params, int chirality) {
    size_t d = m.dim_spinor, h = d / 2;
    Matrix full(d, d);
    for (const auto& [pair, w] : params) {
        auto [I, J] = pair;
        if (I >= J) throw std::invalid_argument("lie parameter labels must satisfy I < J");
        if (w == 0) continue;
        full += m.gamma.at(I) * m.gamma.at(J) * GaussRational(w);
    }
    Matrix block(h, h);
    size_t off = (chirality >= 0) ? 0 : h;
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j) block(i, j) = full(i + off, j + off);
    return block;
}

std::vector<Matrix> x_model_generators(AlgKind kind, bool include_diagonal) {
    const CompAlgebra& alg = make_algebra(kind);
    int d = alg.dim;
    std::vector<Matrix> gens;
    for (int b = 0; b < d; ++b) {
        AlgElement e = AlgElement::basis(kind, b);
        Matrix lo = left_mult_matrix(e), up = left_mult_matrix(conj(e));
        Matrix g(2 * d, 2 * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                g(i, j + d) = up(i, j);
                g(i + d, j) = lo(i, j);
            }
        gens.push_back(std::move(g));
    }
    if (include_diagonal) {
        Matrix g(2 * d, 2 * d);
        for (int i = 0; i < d; ++i) {
            g(i, i) = GaussRational(1);
            g(i + d, i + d) = GaussRational(-1);
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace clif
