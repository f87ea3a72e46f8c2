#include "clif/report.hpp"

#include <random>

#include "clif/dictionary.hpp"
#include "clif/geometry.hpp"
#include "clif/json_io.hpp"

namespace clif {

namespace {

const GaussRational I = GaussRational::i();
using Vec = std::vector<GaussRational>;

Vec oct(std::initializer_list<GaussRational> coords) { return Vec(coords); }

ReportEntry entry(std::string id, std::string claim, std::string anchor, bool ok,
                  nlohmann::json payload = nlohmann::json::object()) {
    return {std::move(id), std::move(claim), std::move(anchor), ok ? "pass" : "fail",
            std::move(payload)};
}

Rational rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return rat(num(rng), den(rng));
}

GaussRational rand_gauss(std::mt19937& rng) { return {rand_rat(rng), rand_rat(rng)}; }

Vec random_complex(std::mt19937& rng, int n) {
    Vec v(n);
    for (auto& z : v) z = rand_gauss(rng);
    return v;
}

Matrix chiral_block(const CliffordModel& m, int label) {
    return submatrix(m.gamma.at(label), m.half(), 0, m.half(), m.half());
}

Form one_form(const std::vector<int>& labels, const Vec& comps) {
    Form f;
    for (size_t i = 0; i < labels.size(); ++i) f += Form::monomial({labels[i]}, comps[i]);
    return f;
}

Vec relation_row(const CliffordModel& m, std::vector<std::array<int, 3>> terms) {
    auto idx = lie_param_index(m);
    Vec row(idx.size());
    for (auto [a, b, c] : terms) {
        GaussRational s{(long)c};
        if (a > b) {
            std::swap(a, b);
            s = -s;
        }
        for (size_t k = 0; k < idx.size(); ++k)
            if (idx[k] == std::make_pair(a, b)) row[k] += s;
    }
    return row;
}

bool relation_holds(const Vec& row, const std::vector<Vec>& kernel) {
    for (const auto& v : kernel) {
        GaussRational s;
        for (size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
        if (!s.is_zero()) return false;
    }
    return true;
}

Vec random_null_cl8(const CliffordModel& m, std::mt19937& rng) {
    while (true) {
        Polyform b(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) b += Polyform::monomial(4, {i, j}, rand_gauss(rng));
        GaussRational s = rand_gauss(rng);
        if (s.is_zero()) continue;
        Polyform p = Polyform::scalar(4, s) + s * b + (s / GaussRational(2)) * wedge(b, b);
        return coords_in_basis(p, m.basis);
    }
}

// ---- criterion 1: exhaustive Clifford relation sweep over all models ----

Criterion criterion_relations() {
    Criterion c{1, "Clifford relations hold exactly in every model", {}, };
    nlohmann::json models = nlohmann::json::object();
    bool ok = true;
    for (const std::string& name : model_names()) {
        CliffordReport rep = verify_clifford(build_model(name));
        models[name] = rep.all_pass() ? "ok" : "fail";
        ok = ok && rep.all_pass();
    }
    c.entries.push_back(entry("1.1/clifford-relations",
                              "every anticommutator {Gamma_I, Gamma_J} equals 2 g_IJ exactly, "
                              "with the chirality grading and reality-operator squares verified",
                              "Clifford algebra construction", ok, {{"models", models}}));
    return c;
}

// ---- criterion 2: chiral gamma blocks are octonion left multiplications ----

Criterion criterion_e_matrices() {
    Criterion c{2, "Chiral gamma blocks are the left-multiplication matrices", {}};
    const CliffordModel& c8 = build_model("cl8");
    bool ok8 = true;
    for (int a = 1; a <= 7; ++a)
        ok8 = ok8 && chiral_block(c8, a) == left_mult_matrix(AlgElement::basis(AlgKind::O, a));
    c.entries.push_back(entry("4.5/e-matrices",
                              "the S- <- S+ block of Gamma_a equals L_{e^a} for a = 1..7",
                              "E-matrix identification, euclidean 8d", ok8, {{"checked", 7}}));
    const CliffordModel& c44 = build_model("cl44-real");
    bool ok44 = true;
    for (int a = 1; a <= 7; ++a)
        ok44 =
            ok44 && chiral_block(c44, a) == left_mult_matrix(AlgElement::basis(AlgKind::Osplit, a));
    c.entries.push_back(entry("5.3/e-matrices-split",
                              "the S- <- S+ block of Gamma_a equals L_{e~^a} for a = 1..7",
                              "E-matrix identification, split 4+4", ok44, {{"checked", 7}}));
    return c;
}

// ---- criterion 3: the stabilizer dimension table ----

Criterion criterion_stabilizers() {
    Criterion c{3, "Stabilizer dimension table", {}};
    const CliffordModel& m = build_model("cl44-complex");
    Vec cplx = oct({1, 0, 0, -I, 0, 0, 0, 0});
    Vec plus4 = oct({1, 0, 0, 0, 1, 0, 0, 0});
    Vec minus4 = oct({1, 0, 0, 0, -1, 0, 0, 0});
    Vec mixed1 = oct({1, 0, 0, -I, -1, 0, 0, -I});
    Vec mixed2 = oct({1, 0, 0, I, 1, 0, 0, -I});
    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    Vec bnull = oct({1, 0, 0, I, I, 0, 0, 0});

    auto stab_entry = [&](std::string id, std::string claim, std::string anchor,
                          const StabilizerReport& s, int expected) {
        return entry(std::move(id), std::move(claim), std::move(anchor), s.dim == expected,
                     {{"dim", s.dim}, {"label", s.label}});
    };
    c.entries.push_back(stab_entry("5.6/stab-15", "stabilizer of I - i e~3 has dimension 15",
                                   "28-13=15", stabilizer(m, cplx), 15));
    c.entries.push_back(stab_entry("5.6/stab-21", "stabilizer of I + e~4 has dimension 21",
                                   "28-7=21", stabilizer(m, plus4), 21));
    c.entries.push_back(stab_entry("5.6/stab-joint-15",
                                   "joint stabilizer of I +- e~4 has dimension 15", "28-7-6=15",
                                   joint_stabilizer(m, {plus4, minus4}), 15));
    c.entries.push_back(stab_entry("5.6/stab-mixed-15",
                                   "stabilizer of the mixed-type pure spinor has dimension 15",
                                   "mixed-type representative", stabilizer(m, mixed1), 15));
    c.entries.push_back(stab_entry("5.6/stab-mixed-pair-6",
                                   "joint stabilizer of the mixed-type pair has dimension 6",
                                   "thus 6-dimensional", joint_stabilizer(m, {mixed1, mixed2}), 6));

    // the Majorana direction: dimension 21 and the explicit 7-relation
    // system (with one sign corrected: the kernel satisfies
    // w^6 = w^17 + w^24 - w^35, uniquely among three-term candidates)
    StabilizerReport sm = stabilizer(m, maj);
    std::vector<Vec> spin7 = {
        relation_row(m, {{{0, 1, 1}, {2, 3, -1}, {4, 5, 1}, {6, 7, -1}}}),
        relation_row(m, {{{0, 2, 1}, {1, 3, 1}, {4, 6, 1}, {5, 7, 1}}}),
        relation_row(m, {{{0, 3, 1}, {1, 2, -1}, {4, 7, 1}, {5, 6, -1}}}),
        relation_row(m, {{{0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1}}}),
        relation_row(m, {{{0, 5, 1}, {1, 4, -1}, {2, 7, 1}, {3, 6, -1}}}),
        relation_row(m, {{{0, 6, 1}, {1, 7, -1}, {2, 4, -1}, {3, 5, 1}}}),
        relation_row(m, {{{0, 7, 1}, {1, 6, 1}, {2, 5, -1}, {3, 4, -1}}}),
    };
    bool sys_ok = sm.dim == 21 && rank(Matrix::from_rows(spin7)) == 7;
    for (const auto& r : spin7) sys_ok = sys_ok && relation_holds(r, sm.kernel);
    c.entries.push_back(entry(
        "5.7/stab-spin7-21",
        "the Majorana direction I has a 21-dimensional stabilizer cut out exactly by the "
        "seven displayed relations",
        "28-7=21 and the seven-relation system", sys_ok,
        {{"dim", sm.dim},
         {"label", sm.label},
         {"note", "one sign in the w^6 relation corrected to w^6 = w^17 + w^24 - w^35; the "
                  "printed w^25 term already occurs in the w^7 relation"}}));

    // the beta-null representative, documented as 21 - 4 = 17: the four
    // supplementary relations all hold on the kernel, but two further
    // independent relations hold as well, so the exact dimension is 15
    StabilizerReport sb = stabilizer(m, bnull);
    std::vector<Vec> extra = {
        relation_row(m, {{{1, 6, 1}, {2, 5, -1}}}),
        relation_row(m, {{{1, 2, 1}, {1, 5, 1}, {2, 6, 1}, {5, 6, 1}}}),
        relation_row(m, {{{2, 3, 1}, {2, 4, -1}, {3, 5, -1}, {4, 5, 1}}}),
        relation_row(m, {{{1, 3, -1}, {1, 4, 1}, {3, 6, -1}, {4, 6, 1}}}),
    };
    bool extra_ok = true;
    for (const auto& r : extra) extra_ok = extra_ok && relation_holds(r, sb.kernel);
    ReportEntry e17 = entry(
        "5.8/stab-17", "stabilizer of I + i(e~3 + e~4), documented as 21 - 4 = 17 dimensional",
        "21-4=17", sb.dim == 15 && extra_ok,
        {{"documented_dim", 17},
         {"computed_dim", sb.dim},
         {"supplementary_relations_hold", extra_ok},
         {"note",
          "the four displayed supplementary relations hold on the kernel but are not "
          "independent modulo the base system; the full system has rank 13, giving dimension "
          "15. Cross-check: the 21-dimensional stabilizer of I acts on the 7-dimensional "
          "imaginary part, where a nonzero null vector has a 6-dimensional orbit, and "
          "21 - 6 = 15 = dim of the joint stabilizer of I and e~3 + e~4."}});
    if (e17.status == "pass") e17.status = "derived";
    c.entries.push_back(e17);
    return c;
}

// ---- criterion 4: pure-spinor 2-forms ----

Criterion criterion_two_forms() {
    Criterion c{4, "Pure-spinor 2-forms match the displayed expressions", {}};
    const CliffordModel& c8 = build_model("cl8");
    const CliffordModel& c44 = build_model("cl44-complex");
    auto b2 = [](const CliffordModel& m, const Vec& p, const Vec& q) {
        return bilinear(m, 2, embed_chiral(m, p), embed_chiral(m, q));
    };

    Form omega = Form::monomial({1, 5}) + Form::monomial({2, 6}) + Form::monomial({3, 7});
    Form expected8 = (GaussRational(2) * I) * (Form::monomial({0, 4}) - omega);
    c.entries.push_back(entry(
        "4.6/b2-pure-pair", "B_2(I + i u, I - i u) = 2i (I ^ u - omega)", "spin8 2-form",
        b2(c8, oct({1, 0, 0, 0, I, 0, 0, 0}), oct({1, 0, 0, 0, -I, 0, 0, 0})) == expected8));

    Form expected44 = GaussRational(2) * (Form::monomial({0, 4}) + omega);
    c.entries.push_back(entry(
        "5.5/b2-null-pair", "B_2(I - e~4, I + e~4) = 2 (I ^ e~4 + e~15 + e~26 + e~37)",
        "split null pair 2-form",
        b2(c44, oct({1, 0, 0, 0, -1, 0, 0, 0}), oct({1, 0, 0, 0, 1, 0, 0, 0})) == expected44));

    Form expected_mixed =
        GaussRational(4) * (Form::monomial({0, 4}) + Form::monomial({3, 7}) +
                            I * Form::monomial({1, 2}) + I * Form::monomial({5, 6}));
    c.entries.push_back(
        entry("5.6/b2-mixed", "the mixed-type pair 2-form is 4 (e~04 + e~37 + i e~12 + i e~56)",
              "mixed-type 2-form",
              b2(c44, oct({1, 0, 0, -I, -1, 0, 0, -I}), oct({1, 0, 0, I, 1, 0, 0, -I})) ==
                  expected_mixed));

    Form expected_null =
        (GaussRational(2) * I) *
        (wedge(one_form({0, 7}, {1, 1}), one_form({3, 4}, {1, -1})) +
         wedge(one_form({2, 5}, {1, 1}), one_form({1, 6}, {1, -1})));
    c.entries.push_back(entry(
        "5.8/2form-new-orbit",
        "the beta-null orbit 2-form is 2i ((I + e~7)^(e~3 - e~4) + (e~2 + e~5)^(e~1 - e~6))",
        "sum of two decomposable pieces",
        b2(c44, oct({1, 0, 0, I, I, 0, 0, 0}), oct({1, 0, 0, -I, -I, 0, 0, 0})) ==
            expected_null));
    return c;
}

// ---- criterion 5: 4-form identities ----

Criterion criterion_four_forms() {
    Criterion c{5, "Four-form identities", {}};
    const CliffordModel& m = build_model("cl8");
    Form C = octonion_three_form(false);
    Form starC = hodge_star(C, 0b11111110, [](int) { return 1; });
    Form u = Form::monomial({4});
    Form omega = Form::monomial({1, 5}) + Form::monomial({2, 6}) + Form::monomial({3, 7});
    Form Omega = wedge(wedge(one_form({1, 5}, {1, -I}), one_form({2, 6}, {1, -I})),
                       one_form({3, 7}, {1, -I}));

    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    c.entries.push_back(entry("4.7/b4-identity", "B_4(I, I) = I ^ C - *C", "4-form identity",
                              four_form(m, maj, maj) == wedge(Form::monomial({0}), C) - starC));
    Vec p = oct({1, 0, 0, 0, -I, 0, 0, 0});
    c.entries.push_back(
        entry("4.7/b4-holomorphic", "(i/2) B_4(I - i u, I - i u) = (I + i u) ^ Omega",
              "holomorphic volume identity",
              (I / GaussRational(2)) * four_form(m, p, p) == wedge(one_form({0, 4}, {1, I}), Omega)));
    bool alg_ok = C == wedge(u, omega) + Omega.imag_part() &&
                  starC == wedge(Omega.real_part(), u) + rat(1, 2) * wedge(omega, omega);
    c.entries.push_back(entry("4.4/c-omega-identities",
                              "C = u ^ omega + Im Omega and *C = Re Omega ^ u + omega^2/2",
                              "C-Omega decomposition", alg_ok));
    return c;
}

// ---- criterion 6: norm transport through the dictionaries ----

Criterion criterion_norm_transport() {
    Criterion c{6, "Norm-transport identities (100 random spinors each)", {}};
    std::mt19937 rng(606060);

    const CliffordModel& m4 = build_model("cl4");
    Dictionary d4 = dict_c2_h();
    bool ok4 = true;
    for (int t = 0; t < 100; ++t) {
        Vec u = random_complex(rng, 2);
        Vec psi = {u[0], u[1], GaussRational(0), GaussRational(0)};
        AlgElement q = d4.to_algebra(u).at(0);
        ok4 = ok4 && GaussRational(4) * spinor_pairing(m4, m4.Rprime.apply(psi), psi) ==
                         GaussRational(norm2(q));
    }
    c.entries.push_back(
        entry("2.3/norm-4d", "4 <R' psi, psi> = |q|^2", "euclidean 4d norm transport", ok4));

    const CliffordModel& m22 = build_model("cl22");
    Dictionary d22 = dict_c2_hsplit();
    bool ok22 = true;
    for (int t = 0; t < 100; ++t) {
        Vec u = random_complex(rng, 2);
        Vec psi = {u[0], u[1], GaussRational(0), GaussRational(0)};
        AlgElement q = d22.to_algebra(u).at(0);
        ok22 = ok22 && spinor_pairing(m22, m22.Rprime.apply(psi), psi) ==
                           -GaussRational(rat(1, 4)) * GaussRational(norm2(q));
    }
    c.entries.push_back(
        entry("2.4/norm-22", "<R' psi, psi> = -|q|^2 / 4", "2+2 norm transport", ok22));

    const CliffordModel& m6 = build_model("cl6");
    Dictionary d6 = dict_cl6_h2();
    bool ok6 = true;
    for (int t = 0; t < 100; ++t) {
        Vec upl = random_complex(rng, 4);
        Vec psi(8);
        for (int k = 0; k < 4; ++k) psi[k] = upl[k];
        auto qs = d6.to_algebra(upl);
        ok6 = ok6 && GaussRational(4) * I * spinor_pairing(m6, m6.Rprime.apply(psi), psi) ==
                         GaussRational(norm2(qs[0]) + norm2(qs[1]));
    }
    c.entries.push_back(
        entry("2.5/norm-6d", "4i <R' psi, psi> = |u|^2 + |v|^2", "6d norm transport", ok6));
    return c;
}

// ---- criterion 7: Hopf maps are exactly null ----

Criterion criterion_hopf() {
    Criterion c{7, "Quaternionic Hopf maps land on the null cone", {}};
    std::mt19937 rng(77777);
    for (AlgKind kind : {AlgKind::H, AlgKind::Hsplit}) {
        bool ok =
            hopf_map(kind, AlgElement::identity(kind), AlgElement::zero(kind)) ==
            Vec({0, 0, 0, 0, 1, 1});
        for (int t = 0; t < 100; ++t) {
            Vec uc(4), vc(4);
            for (auto& z : uc) z = GaussRational(rand_rat(rng));
            for (auto& z : vc) z = GaussRational(rand_rat(rng));
            ok = ok && hopf_null_residual(
                           kind, hopf_map(kind, AlgElement(kind, uc), AlgElement(kind, vc)))
                           .is_zero();
        }
        bool split = kind == AlgKind::Hsplit;
        c.entries.push_back(entry(split ? "3.4/hopf-split-null" : "2.5/hopf-null",
                                  std::string("the image is exactly null in R^") +
                                      (split ? "{3,3}" : "{1,5}"),
                                  "the right-hand side is a null vector", ok,
                                  {{"random_pairs", 100}}));
    }
    return c;
}

// ---- criterion 8: purity criterion equivalence ----

Criterion criterion_purity() {
    Criterion c{8, "Purity is equivalent to a vanishing self-pairing (8d euclidean)", {}};
    const CliffordModel& m = build_model("cl8");
    std::mt19937 rng(808080);
    bool ok = true;
    int nulls = 0, non_nulls = 0;
    while (nulls < 50) {
        Vec psi = random_null_cl8(m, rng);
        Vec full = embed_chiral(m, psi);
        ok = ok && spinor_pairing(m, full, full).is_zero() && is_pure(m, psi) &&
             bilinear(m, 2, full, full).is_zero();
        ++nulls;
    }
    while (non_nulls < 50) {
        Vec psi = random_complex(rng, 8);
        Vec full = embed_chiral(m, psi);
        if (spinor_pairing(m, full, full).is_zero()) continue;
        ok = ok && !is_pure(m, psi) && bilinear(m, 2, full, full).is_zero();
        ++non_nulls;
    }
    c.entries.push_back(entry("4.8/purity-criterion",
                              "annihilator dimension 4 iff <psi, psi> = 0, with B_2(psi, psi) = 0 "
                              "identically, on 50 null and 50 non-null random spinors",
                              "B_2(psi+, psi+) = 0", ok));
    return c;
}

// ---- criterion 9: chiral Lie algebra spans ----

Criterion criterion_lie_spans() {
    Criterion c{9, "Chiral Lie algebra images have dimension 15 and vanishing real trace", {}};
    struct Case {
        std::string model, id, claim;
        Dictionary dict;
    };
    for (const Case& cs :
         {Case{"cl51", "2.6/sl2h-span", "the 5+1 chiral image is the 15-dimensional "
                       "trace-free quaternion-linear algebra", dict_cl51_h2()},
          Case{"cl33", "3.5/sl2hsplit-span", "the 3+3 chiral image is the 15-dimensional "
                       "trace-free split-quaternion-linear algebra", dict_cl33_hsplit2()}}) {
        const CliffordModel& m = build_model(cs.model);
        std::vector<Vec> rows;
        bool traces_ok = true;
        for (auto [a, b] : lie_param_index(m)) {
            Matrix e = lie_element(m, {{{a, b}, 1}}, +1);
            Vec flat;
            for (size_t i = 0; i < e.rows(); ++i)
                for (size_t j = 0; j < e.cols(); ++j) flat.push_back(e(i, j));
            rows.push_back(std::move(flat));
            Matrix blk = cs.dict.forward * realify_linear(e) * cs.dict.backward;
            traces_ok = traces_ok && trace(blk).is_zero();
        }
        size_t dim = rank(realified_rows(Matrix::from_rows(rows)));
        c.entries.push_back(entry(cs.id, cs.claim, "spin(5,1) and spin(3,3) as 2x2 algebras",
                                  dim == 15 && traces_ok, {{"span_dim", dim}}));
    }
    return c;
}

// ---- criterion 10: dictionary round trips and intertwinings ----

Criterion criterion_dictionaries() {
    Criterion c{10, "Dictionary round trips and operator intertwinings", {}};
    bool rt = true;
    for (const Dictionary& d :
         {dict_c2_h(), dict_c2_hsplit(), dict_cl8_majorana(+1), dict_cl8_majorana(-1),
          dict_cl44("real"), dict_cl44("complex"), dict_cl6_h2(), dict_cl51_h2(),
          dict_cl33_hsplit2()}) {
        rt = rt && d.forward * d.backward == Matrix::identity(d.forward.rows()) &&
             d.backward * d.forward == Matrix::identity(d.forward.rows());
    }
    c.entries.push_back(entry("dict/round-trips",
                              "backward composed with forward is the identity for all nine "
                              "dictionaries",
                              "dictionary invertibility", rt, {{"dictionaries", 9}}));

    bool iw = true;
    // hat transports to right multiplication by -i, scalar -i to R_k
    Dictionary dh = dict_c2_h();
    Matrix hat(2, 2);
    hat(0, 1) = GaussRational(1);
    hat(1, 0) = GaussRational(-1);
    iw = iw && dh.forward * realify_antilinear(hat) ==
                   right_mult_matrix(-AlgElement::basis(AlgKind::H, 1)) * dh.forward;
    iw = iw && dh.forward * realify_linear(Matrix::identity(2) * (-I)) ==
                   right_mult_matrix(AlgElement::basis(AlgKind::H, 3)) * dh.forward;
    // R' of the 3+3 model acts blockwise as right multiplication by i~
    const CliffordModel& m33 = build_model("cl33");
    Dictionary ds = dict_cl33_hsplit2();
    Matrix blk = realify_antilinear(submatrix(m33.Rprime.mat, 0, 0, 4, 4));
    Matrix rit = right_mult_matrix(AlgElement::basis(AlgKind::Hsplit, 1));
    Matrix z4(4, 4);
    iw = iw && ds.forward * blk == assemble2x2(rit, z4, z4, rit) * ds.forward;
    // gamma blocks of the 4d models act as quaternion left multiplications
    for (auto [model_name, dict] :
         {std::pair<std::string, Dictionary>{"cl4", dict_c2_h()},
          std::pair<std::string, Dictionary>{"cl22", dict_c2_hsplit()}}) {
        const CliffordModel& m = build_model(model_name);
        for (int pos = 0; pos < 4; ++pos) {
            AlgElement p = AlgElement(dict.algebra, dict.vector_forward.col(pos));
            Matrix lo = realify_linear(
                submatrix(m.gamma.at(m.labels[pos]), m.half(), 0, m.half(), m.half()));
            iw = iw && dict.forward * lo == left_mult_matrix(p) * dict.forward;
        }
    }
    c.entries.push_back(entry("dict/intertwinings",
                              "hat <-> -R_i, scalar -i <-> R_k, R' <-> R_{i~}, and the gamma "
                              "blocks <-> left multiplications, all with zero residual",
                              "operator dictionary", iw));
    return c;
}

// ---- criterion 11: 3-form decomposability ----

Criterion criterion_b3() {
    Criterion c{11, "Majorana-Weyl 3-forms factor into three real null directions", {}};
    const CliffordModel& m = build_model("cl33");
    std::mt19937 rng(331133);
    bool ok = true;
    int done = 0;
    while (done < 20) {
        Vec full(m.dim_spinor);
        for (int i = 0; i < m.half(); ++i) full[i] = rand_gauss(rng);
        Vec rfull = m.Rprime.apply(full);
        Vec maj(m.dim_spinor);
        for (int i = 0; i < m.dim_spinor; ++i) maj[i] = full[i] + rfull[i];
        bool zero = true;
        for (const auto& z : maj) zero = zero && z.is_zero();
        if (zero) continue;
        B3Report rep = b3_decomposability(m, maj);
        if (rep.three_form.is_zero()) continue;
        ok = ok && rep.decomposable && rep.factors.size() == 3;
        for (const auto& f : rep.factors) {
            GaussRational norm;
            for (size_t p = 0; p < m.labels.size(); ++p) {
                ok = ok && f[p].is_real();
                norm += GaussRational(Rational(m.metric.at(m.labels[p]))) * f[p] * f[p];
            }
            ok = ok && norm.is_zero() && wedge(one_form(m.labels, f), rep.three_form).is_zero();
        }
        ++done;
    }
    c.entries.push_back(entry("3.4/b3-decomposable",
                              "B_3(psi, psi) is decomposable with null real factors for 20 "
                              "random rational Majorana-Weyl spinors",
                              "product of the 3 null real directions", ok,
                              {{"random_spinors", 20}}));
    return c;
}

// ---- criterion 12: orbit classification ----

Criterion criterion_orbits() {
    Criterion c{12, "Orbit classification of the 16-dimensional models", {}};
    const CliffordModel& c8 = build_model("cl8");
    const CliffordModel& c44 = build_model("cl44-complex");
    GaussRational q34{rat(3, 4)}, q54{rat(5, 4)}, q35{rat(3, 5)}, q45{rat(4, 5)};
    struct Case {
        const CliffordModel* m;
        Vec psi;
        std::string label;
        int stab_dim;
    };
    std::vector<Case> cases = {
        {&c44, oct({q54, 0, 0, I * q34, 0, 0, 0, 0}), "case-1-su22", 15},
        {&c44, oct({q35, 0, 0, 0, I * q45, 0, 0, 0}), "case-2-sl4r", 15},
        {&c44, oct({0, 0, 0, 0, q34, 0, 0, I * q54}), "case-3-su22", 15},
        {&c44, oct({1, 0, 0, I, I, 0, 0, 0}), "case-4-beta-null", 15},
        {&c44, oct({I, 0, 0, 1, 1, 0, 0, 0}), "case-5-alpha-null", 15},
        {&c8, oct({1, 0, 0, 0, 0, 0, 0, 0}), "majorana-direction", 21},
        {&c8, oct({q54, 0, 0, 0, I * q34, 0, 0, 0}), "generic-su4", 15},
    };
    GaussRational scales[] = {GaussRational(3), GaussRational(rat(-2, 7)),
                              GaussRational(rat(1, 9)), GaussRational(-5),
                              GaussRational(rat(11, 4))};
    nlohmann::json table = nlohmann::json::array();
    bool ok = true;
    for (const Case& cs : cases) {
        OrbitReport rep = classify_orbit(*cs.m, cs.psi);
        int dim = stabilizer(*cs.m, cs.psi).dim;
        bool this_ok = rep.label == cs.label && dim == cs.stab_dim;
        for (const auto& s : scales) {
            Vec scaled = cs.psi;
            for (auto& z : scaled) z *= s;
            this_ok = this_ok && classify_orbit(*cs.m, scaled).label == cs.label;
        }
        table.push_back({{"model", cs.m->name},
                         {"label", rep.label},
                         {"stabilizer_dim", dim},
                         {"scale_invariant", this_ok}});
        ok = ok && this_ok;
    }
    ReportEntry e = entry("5.8/orbit-classification",
                          "the five case representatives plus the 8d euclidean orbits classify "
                          "to their labels with the listed stabilizer dimensions, invariantly "
                          "under 5 random rational rescalings each",
                          "there are five cases to consider", ok, {{"orbits", table}});
    // case-5 has no documented dimension; its value here is established by
    // this computation
    if (e.status == "pass") e.status = "derived";
    e.payload["derived_case"] =
        "case-5-alpha-null: dimension 15 computed by this artifact (no documented value)";
    c.entries.push_back(e);
    return c;
}

}  // namespace

bool Criterion::passed() const {
    for (const ReportEntry& e : entries)
        if (e.status == "fail") return false;
    return true;
}

int Criterion::derived_count() const {
    int n = 0;
    for (const ReportEntry& e : entries)
        if (e.status == "derived") ++n;
    return n;
}

std::vector<Criterion> run_criteria() {
    return {criterion_relations(),      criterion_e_matrices(), criterion_stabilizers(),
            criterion_two_forms(),      criterion_four_forms(), criterion_norm_transport(),
            criterion_hopf(),           criterion_purity(),     criterion_lie_spans(),
            criterion_dictionaries(),   criterion_b3(),         criterion_orbits()};
}

std::vector<ReportEntry> run_report() {
    std::vector<ReportEntry> out;
    for (Criterion& c : run_criteria())
        for (ReportEntry& e : c.entries) out.push_back(std::move(e));
    out.push_back({"note/group-level-substitution",
                   "group-level statements (transitivity on quaternion pairs, the 7-sphere as "
                   "a homogeneous space) are certified at the Lie-algebra level only, via the "
                   "span and stabilizer entries",
                   "", "derived",
                   {{"covered_by", nlohmann::json::array({"2.6/sl2h-span", "3.5/sl2hsplit-span",
                                                          "5.6/stab-15", "5.7/stab-spin7-21"})}}});
    return out;
}

nlohmann::json report_json(const std::vector<ReportEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportEntry& e : entries)
        arr.push_back({{"id", e.id},
                       {"claim", e.claim},
                       {"anchor", e.anchor},
                       {"status", e.status},
                       {"payload", e.payload}});
    return arr;
}

}  // namespace clif
