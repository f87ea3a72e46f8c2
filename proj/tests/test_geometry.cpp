#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clif/dictionary.hpp"
#include "clif/geometry.hpp"

using namespace clif;

namespace {

const GaussRational I = GaussRational::i();
using Vec = std::vector<GaussRational>;

// Octonion-style chiral coordinates (identity dictionary): slot 0 is the
// unit, slots 1..7 the imaginary units.
Vec oct(std::initializer_list<GaussRational> coords) { return Vec(coords); }

Vec scaled(const Vec& v, const GaussRational& s) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

bool vec_zero(const Vec& v) {
    for (const auto& z : v)
        if (!z.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// (sum_I v^I Gamma_I) psi, v over the model labels in canonical order.
Vec vector_action(const CliffordModel& m, const Vec& v, const Vec& psi) {
    Vec full = embed_chiral(m, psi);
    Vec out(full.size());
    for (size_t p = 0; p < m.labels.size(); ++p) {
        if (v[p].is_zero()) continue;
        Vec g = m.gamma.at(m.labels[p]).apply(full);
        for (size_t i = 0; i < out.size(); ++i) out[i] += v[p] * g[i];
    }
    return out;
}

std::mt19937 rng(20260823);

Rational rand_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return rat(num(rng), den(rng));
}

GaussRational rand_gauss() { return {rand_rat(), rand_rat()}; }

// A random even pure spinor of cl8 in basis coordinates: a nonzero multiple
// of exp(B) = 1 + B + B^2/2 for a random complex 2-form B on 4 generators.
Vec random_null_cl8(const CliffordModel& m) {
    while (true) {
        Polyform b(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) b += Polyform::monomial(4, {i, j}, rand_gauss());
        GaussRational s = rand_gauss();
        if (s.is_zero()) continue;
        Polyform p = Polyform::scalar(4, s) + s * b + (s / GaussRational(2)) * wedge(b, b);
        return coords_in_basis(p, m.basis);
    }
}

// The quaternionic Hopf vector must be null in the metric (algebra norm
// signature, +1, -1).
void check_hopf_null(AlgKind kind, const AlgElement& u, const AlgElement& v) {
    CHECK(hopf_null_residual(kind, hopf_map(kind, u, v)) == GaussRational(0));
}

Form one_form(const std::vector<int>& labels, const std::vector<GaussRational>& comps) {
    Form f;
    for (size_t i = 0; i < labels.size(); ++i) f += Form::monomial({labels[i]}, comps[i]);
    return f;
}

// Relation row in lie-parameter coordinates: terms (a, b, c) contribute
// c * w^{ab} (with w^{ab} = -w^{ba} handled by the sign flip).
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

GaussRational dot(const Vec& a, const Vec& b) {
    GaussRational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool relation_holds(const Vec& row, const std::vector<Vec>& kernel) {
    for (const auto& v : kernel)
        if (!dot(row, v).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("annihilators of the canonical 8d spinors") {
    const auto& c8 = build_model("cl8");
    const auto& c44 = build_model("cl44-complex");

    // the polyform 1 = (I + i u)/2i: annihilated by a 4-dimensional space
    Vec one_spinor = oct({-I / GaussRational(2), 0, 0, 0, rat(1, 2), 0, 0, 0});
    auto a = annihilator(c8, one_spinor);
    CHECK(a.dim == 4);
    CHECK(is_pure(c8, one_spinor));

    // the Majorana-Weyl spinor I is not pure: no annihilating directions
    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(annihilator(c8, maj).dim == 0);
    CHECK_FALSE(is_pure(c8, maj));

    // I + e4~: real pure spinor with the four real null eigenvectors
    Vec null_oct = oct({1, 0, 0, 0, 1, 0, 0, 0});
    auto b = annihilator(c44, null_oct);
    CHECK(b.dim == 4);
    CHECK(b.real_index == 4);
    Vec reals[] = {oct({-1, 0, 0, 0, 1, 0, 0, 0}), oct({0, -1, 0, 0, 0, 1, 0, 0}),
                   oct({0, 0, -1, 0, 0, 0, 1, 0}), oct({0, 0, 0, -1, 0, 0, 0, 1})};
    for (const auto& v : reals) CHECK(vec_zero(vector_action(c44, v, null_oct)));

    // I - i e3~: pure with no real annihilating directions
    Vec cplx = oct({1, 0, 0, -I, 0, 0, 0, 0});
    auto c = annihilator(c44, cplx);
    CHECK(c.dim == 4);
    CHECK(c.real_index == 0);

    // mixed-type pure spinor: annihilated by Gamma_1 - i Gamma_2,
    // Gamma_5 + i Gamma_6, Gamma_0 + Gamma_4, Gamma_3 + Gamma_7
    Vec mixed = oct({1, 0, 0, -I, -1, 0, 0, -I});
    auto d = annihilator(c44, mixed);
    CHECK(d.dim == 4);
    CHECK(d.real_index == 2);
    Vec dirs[] = {oct({0, 1, -I, 0, 0, 0, 0, 0}), oct({0, 0, 0, 0, 0, 1, I, 0}),
                  oct({1, 0, 0, 0, 1, 0, 0, 0}), oct({0, 0, 0, 1, 0, 0, 0, 1})};
    for (const auto& v : dirs) CHECK(vec_zero(vector_action(c44, v, mixed)));

    // the real null spinor e3~ + e4~: a real spinor has a conjugation-stable
    // annihilator, so the real index is maximal
    Vec e34 = oct({0, 0, 0, 1, 1, 0, 0, 0});
    auto e = annihilator(c44, e34);
    CHECK(e.dim == 4);
    CHECK(e.real_index == 4);
    for (const auto& v : e.basis) CHECK(vec_zero(vector_action(c44, v, e34)));

    CHECK_THROWS(annihilator(c8, Vec(8)));
}

TEST_CASE("purity is equivalent to a vanishing self-pairing on cl8") {
    const auto& m = build_model("cl8");
    int nulls = 0, non_nulls = 0;
    while (nulls < 50) {
        Vec psi = random_null_cl8(m);
        Vec full = embed_chiral(m, psi);
        REQUIRE(spinor_pairing(m, full, full).is_zero());
        CHECK(is_pure(m, psi));
        CHECK(bilinear(m, 2, full, full).is_zero());
        ++nulls;
    }
    while (non_nulls < 50) {
        Vec psi(8);
        for (auto& z : psi) z = rand_gauss();
        if (vec_zero(psi)) continue;
        Vec full = embed_chiral(m, psi);
        if (spinor_pairing(m, full, full).is_zero()) continue;
        CHECK_FALSE(is_pure(m, psi));
        CHECK(bilinear(m, 2, full, full).is_zero());
        ++non_nulls;
    }
}

TEST_CASE("stabilizer dimension table of the split 16-dimensional model") {
    const auto& m = build_model("cl44-complex");
    Vec cplx = oct({1, 0, 0, -I, 0, 0, 0, 0});     // I - i e3~
    Vec plus4 = oct({1, 0, 0, 0, 1, 0, 0, 0});     // I + e4~
    Vec minus4 = oct({1, 0, 0, 0, -1, 0, 0, 0});   // I - e4~
    Vec mixed1 = oct({1, 0, 0, -I, -1, 0, 0, -I});
    Vec mixed2 = oct({1, 0, 0, I, 1, 0, 0, -I});

    auto s1 = stabilizer(m, cplx);
    CHECK(s1.dim == 15);
    CHECK(s1.label == "su(2,2)");

    auto s2 = stabilizer(m, plus4);
    CHECK(s2.dim == 21);
    CHECK(s2.label == "sl(4,R)-semidirect");
    CHECK(joint_stabilizer(m, {plus4, minus4}).dim == 15);

    CHECK(stabilizer(m, mixed1).dim == 15);
    auto s3 = joint_stabilizer(m, {mixed1, mixed2});
    CHECK(s3.dim == 6);
    CHECK(s3.label == "mixed-6");

    // idempotence: duplicating the spinor changes nothing
    CHECK(joint_stabilizer(m, {plus4, plus4}).dim == 21);
    CHECK_THROWS(joint_stabilizer(m, {}));

    // every kernel element annihilates the spinor exactly
    auto idx = lie_param_index(m);
    for (const auto& w : s1.kernel) {
        LieParams params;
        for (size_t k = 0; k < idx.size(); ++k) {
            REQUIRE(w[k].is_real());
            if (!w[k].is_zero()) params[idx[k]] = w[k].re;
        }
        Vec half(cplx.begin(), cplx.begin() + 8);
        CHECK(vec_zero(lie_element(m, params, +1).apply(half)));
    }

    // the real model agrees
    const auto& mr = build_model("cl44-real");
    CHECK(stabilizer(mr, plus4).dim == 21);
    CHECK(stabilizer(mr, cplx).dim == 15);
}

TEST_CASE("Majorana stabilizer is the seven-relation system") {
    const auto& m = build_model("cl44-real");
    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    auto s = stabilizer(m, maj);
    CHECK(s.dim == 21);
    CHECK(s.label == "spin(7)");

    // the seven relations (one sign corrected: the kernel satisfies
    // w^6 = w^17 + w^24 - w^35, uniquely among three-term relations)
    std::vector<Vec> rel = {
        relation_row(m, {{{0, 1, 1}, {2, 3, -1}, {4, 5, 1}, {6, 7, -1}}}),
        relation_row(m, {{{0, 2, 1}, {1, 3, 1}, {4, 6, 1}, {5, 7, 1}}}),
        relation_row(m, {{{0, 3, 1}, {1, 2, -1}, {4, 7, 1}, {5, 6, -1}}}),
        relation_row(m, {{{0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1}}}),
        relation_row(m, {{{0, 5, 1}, {1, 4, -1}, {2, 7, 1}, {3, 6, -1}}}),
        relation_row(m, {{{0, 6, 1}, {1, 7, -1}, {2, 4, -1}, {3, 5, 1}}}),
        relation_row(m, {{{0, 7, 1}, {1, 6, 1}, {2, 5, -1}, {3, 4, -1}}}),
    };
    for (const auto& r : rel) CHECK(relation_holds(r, s.kernel));
    // the relations generate the full system: rank 7 both alone and
    // together with the kernel's orthogonal complement
    CHECK(rank(Matrix::from_rows(rel)) == 7);
}

TEST_CASE("stabilizer of the null-part orbit representative") {
    // psi = I + i(e3~ + e4~): the intersection of the stabilizers of I
    // (dim 21) and of the real null spinor e3~ + e4~ (dim 21).
    const auto& m = build_model("cl44-complex");
    Vec psi = oct({1, 0, 0, I, I, 0, 0, 0});
    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    Vec e34 = oct({0, 0, 0, 1, 1, 0, 0, 0});

    CHECK(stabilizer(m, e34).dim == 21);
    auto s = stabilizer(m, psi);
    // documented as 21 - 4 = 17, but the exact kernel is 15-dimensional:
    // the four supplementary relations below all hold, yet the system has
    // rank 13, not 11. Certificate: the stabilizer of I acts on the
    // imaginary split octonions through its 7-dimensional representation,
    // and a nonzero null vector there has a codimension-6 orbit, giving
    // 21 - 6 = 15.
    CHECK(s.dim == 15);
    CHECK(s.dim == joint_stabilizer(m, {maj, e34}).dim);
    std::vector<Vec> extra = {
        relation_row(m, {{{1, 6, 1}, {2, 5, -1}}}),
        relation_row(m, {{{1, 2, 1}, {1, 5, 1}, {2, 6, 1}, {5, 6, 1}}}),
        relation_row(m, {{{2, 3, 1}, {2, 4, -1}, {3, 5, -1}, {4, 5, 1}}}),
        relation_row(m, {{{1, 3, -1}, {1, 4, 1}, {3, 6, -1}, {4, 6, 1}}}),
    };
    for (const auto& r : extra) CHECK(relation_holds(r, s.kernel));
}

TEST_CASE("two-forms and the structures they define") {
    const auto& c8 = build_model("cl8");
    const auto& c44 = build_model("cl44-complex");

    SUBCASE("complex structure of the canonical 8d pure pair") {
        Vec p = oct({1, 0, 0, 0, I, 0, 0, 0}), q = oct({1, 0, 0, 0, -I, 0, 0, 0});
        auto s = structure_from_pair(c8, p, q);
        Form expected = (GaussRational(2) * I) *
                        (Form::monomial({0, 4}) - Form::monomial({1, 5}) -
                         Form::monomial({2, 6}) - Form::monomial({3, 7}));
        CHECK(s.two_form == expected);
        CHECK(s.kind == "complex");
        Matrix ru = right_mult_matrix(AlgElement::basis(AlgKind::O, 4));
        CHECK(s.endo * s.scale == ru * (GaussRational(2) * I));
    }

    SUBCASE("paracomplex structure of the real null pair") {
        Vec p = oct({1, 0, 0, 0, -1, 0, 0, 0}), q = oct({1, 0, 0, 0, 1, 0, 0, 0});
        auto s = structure_from_pair(c44, p, q);
        Form expected = GaussRational(2) *
                        (Form::monomial({0, 4}) + Form::monomial({1, 5}) +
                         Form::monomial({2, 6}) + Form::monomial({3, 7}));
        CHECK(s.two_form == expected);
        CHECK(s.kind == "paracomplex");
        // raising with the split metric lands on -2 R_{e4~}; the +-1
        // eigenspaces (hence the paracomplex structure) are those of R_{e4~}
        Matrix re4 = right_mult_matrix(AlgElement::basis(AlgKind::Osplit, 4));
        CHECK(s.endo * s.scale == re4 * GaussRational(-2));
        Vec eig = oct({1, 0, 0, 0, 1, 0, 0, 0});
        CHECK(s.endo.apply(eig) == eig);
    }

    SUBCASE("mixed structure of the index-2 pair") {
        Vec p = oct({1, 0, 0, -I, -1, 0, 0, -I}), q = oct({1, 0, 0, I, 1, 0, 0, -I});
        auto s = structure_from_pair(c44, p, q);
        Form expected = GaussRational(4) * (Form::monomial({0, 4}) + Form::monomial({3, 7}) +
                                            I * Form::monomial({1, 2}) + I * Form::monomial({5, 6}));
        CHECK(s.two_form == expected);
        CHECK(s.kind == "mixed");
        // the primitive endomorphism squares to a scalar exactly
        Matrix sq = s.endo * s.endo;
        CHECK(sq == Matrix::identity(8) * sq(0, 0));
    }

    SUBCASE("two-form of the null-part orbit") {
        Vec p = oct({1, 0, 0, I, I, 0, 0, 0}), q = oct({1, 0, 0, -I, -I, 0, 0, 0});
        Form f = bilinear(c44, 2, embed_chiral(c44, p), embed_chiral(c44, q));
        // 2i((I + e7~) ^ (e3~ - e4~) + (e2~ + e5~) ^ (e1~ - e6~))
        Form expected =
            (GaussRational(2) * I) *
            (wedge(one_form({0, 7}, {1, 1}), one_form({3, 4}, {1, -1})) +
             wedge(one_form({2, 5}, {1, 1}), one_form({1, 6}, {1, -1})));
        CHECK(f == expected);
    }
}

TEST_CASE("four-form identities of the octonionic model") {
    const auto& m = build_model("cl8");
    Form C = octonion_three_form(false);
    auto metric = [](int) { return 1; };
    uint8_t imag_mask = 0b11111110;
    Form starC = hodge_star(C, imag_mask, metric);
    Form u = Form::monomial({4});
    Form omega = Form::monomial({1, 5}) + Form::monomial({2, 6}) + Form::monomial({3, 7});
    Form Omega = wedge(wedge(one_form({1, 5}, {1, -I}), one_form({2, 6}, {1, -I})),
                       one_form({3, 7}, {1, -I}));

    // C = u ^ omega + Im(Omega) and *C = Re(Omega) ^ u + omega^2 / 2
    CHECK(C == wedge(u, omega) + Omega.imag_part());
    CHECK(starC == wedge(Omega.real_part(), u) + rat(1, 2) * wedge(omega, omega));

    // B4 of the Majorana-Weyl unit is I ^ C - *C
    Vec maj = oct({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(four_form(m, maj, maj) == wedge(Form::monomial({0}), C) - starC);

    // (i/2) B4 of the conjugate canonical pure spinor is (I + i u) ^ Omega
    Vec p = oct({1, 0, 0, 0, -I, 0, 0, 0});
    Form holo = (I / GaussRational(2)) * four_form(m, p, p);
    CHECK(holo == wedge(one_form({0, 4}, {1, I}), Omega));
}

TEST_CASE("orbit classification of the 16-dimensional models") {
    const auto& c8 = build_model("cl8");
    const auto& c44 = build_model("cl44-complex");

    struct Case {
        const CliffordModel* m;
        Vec psi;
        std::string label;
        int stab_dim;
    };
    GaussRational q34{rat(3, 4)}, q54{rat(5, 4)}, q35{rat(3, 5)}, q45{rat(4, 5)};
    std::vector<Case> cases = {
        {&c8, oct({1, 0, 0, 0, I, 0, 0, 0}), "pure", 15},
        {&c8, oct({1, 0, 0, 0, 0, 0, 0, 0}), "majorana-direction", 21},
        {&c8, oct({q54, 0, 0, 0, I * q34, 0, 0, 0}), "generic-su4", 15},
        {&c44, oct({1, 0, 0, -I, 0, 0, 0, 0}), "pure-complex-type", 15},
        {&c44, oct({1, 0, 0, 0, 1, 0, 0, 0}), "pure-paracomplex-type", 21},
        {&c44, oct({1, 0, 0, -I, -1, 0, 0, -I}), "pure-mixed-type", 15},
        {&c44, oct({1, 0, 0, 0, 0, 0, 0, 0}), "majorana-direction", 21},
        {&c44, oct({q54, 0, 0, I * q34, 0, 0, 0, 0}), "case-1-su22", 15},
        {&c44, oct({q35, 0, 0, 0, I * q45, 0, 0, 0}), "case-2-sl4r", 15},
        {&c44, oct({0, 0, 0, 0, q34, 0, 0, I * q54}), "case-3-su22", 15},
        {&c44, oct({1, 0, 0, I, I, 0, 0, 0}), "case-4-beta-null", 15},
        {&c44, oct({I, 0, 0, 1, 1, 0, 0, 0}), "case-5-alpha-null", 15},
    };
    GaussRational scales[] = {GaussRational(3), GaussRational(rat(-2, 7)), GaussRational(rat(1, 9)),
                              GaussRational(-5), GaussRational(rat(11, 4))};
    for (const auto& c : cases) {
        CAPTURE(c.label);
        CHECK(classify_orbit(*c.m, c.psi).label == c.label);
        CHECK(stabilizer(*c.m, c.psi).dim == c.stab_dim);
        for (const auto& s : scales) CHECK(classify_orbit(*c.m, scaled(c.psi, s)).label == c.label);
    }

    // invariant identities: <psi,psi> and <R(psi),psi> against the real and
    // imaginary octonion parts
    for (const auto& c : cases) {
        auto inv = classify_orbit(*c.m, c.psi).inv;
        GaussRational expect_self{Rational(inv.alpha_norm2 - inv.beta_norm2),
                                  Rational(2 * inv.alpha_beta_pairing)};
        CHECK(inv.q_self == expect_self);
        CHECK(inv.q_R == GaussRational(inv.alpha_norm2 + inv.beta_norm2));
    }
}

TEST_CASE("hyperbolic and circular rational points") {
    auto h = make_hyperbolic_point(rat(5, 4), rat(3, 4), +1);
    CHECK(Rational(h.c * h.c - h.s * h.s) == 1);
    auto c = make_hyperbolic_point(rat(3, 5), rat(4, 5), -1);
    CHECK(Rational(c.c * c.c + c.s * c.s) == 1);
    CHECK_THROWS(make_hyperbolic_point(rat(1, 2), rat(1, 2), +1));
    CHECK_THROWS(make_hyperbolic_point(rat(5, 4), rat(3, 4), 0));
}

TEST_CASE("an impure unit spinor determines a pure one") {
    const auto& c8 = build_model("cl8");
    const auto& c44 = build_model("cl44-complex");
    GaussRational q34{rat(3, 4)}, q54{rat(5, 4)}, q35{rat(3, 5)}, q45{rat(4, 5)};

    auto check_pure_sum = [](const CliffordModel& m, const Vec& psi, const Vec& tilde) {
        Vec sum = add(psi, tilde);
        Vec full = embed_chiral(m, sum);
        CHECK(spinor_pairing(m, full, full).is_zero());
        CHECK(is_pure(m, sum));
        Vec tfull = embed_chiral(m, tilde);
        CHECK(spinor_pairing(m, tfull, tfull) == GaussRational(-1));
    };

    // cosh/sinh representative on (I, u): psi~ swaps the coefficients
    Vec psi8 = oct({q54, 0, 0, 0, I * q34, 0, 0, 0});
    Vec t8 = impure_to_pure(c8, psi8);
    CHECK(t8 == oct({q34, 0, 0, 0, I * q54, 0, 0, 0}));
    check_pure_sum(c8, psi8, t8);

    // circle representative on (I, e4~): psi~ = i sin I + cos e4~
    Vec psi2 = oct({q35, 0, 0, 0, I * q45, 0, 0, 0});
    Vec t2 = impure_to_pure(c44, psi2);
    CHECK(t2 == oct({I * q45, 0, 0, 0, q35, 0, 0, 0}));
    check_pure_sum(c44, psi2, t2);

    // cosh/sinh representative on (e4~, e7~)
    Vec psi3 = oct({0, 0, 0, 0, q34, 0, 0, I * q54});
    Vec t3 = impure_to_pure(c44, psi3);
    CHECK(t3 == oct({0, 0, 0, 0, -q54, 0, 0, -I * q34}));
    check_pure_sum(c44, psi3, t3);

    // lambda = 1: the construction degenerates
    CHECK_THROWS(impure_to_pure(c8, oct({1, 0, 0, 0, 0, 0, 0, 0})));
    // non-unit input is rejected
    CHECK_THROWS(impure_to_pure(c8, oct({2, 0, 0, 0, 0, 0, 0, 0})));
    // unit spinor with an irrational normalizer: |alpha|^2 = 3, |beta|^2 = 2
    Vec irr = oct({1, 1, 1, 0, 0, 0, 0, 0});
    for (int k : {3, 5}) irr[k] += I;
    CHECK_THROWS(impure_to_pure(c8, irr));
}

TEST_CASE("quaternionic Hopf maps land on the null cone") {
    for (AlgKind kind : {AlgKind::H, AlgKind::Hsplit}) {
        CAPTURE(alg_kind_name(kind));
        AlgElement id = AlgElement::identity(kind), zero = AlgElement::zero(kind);
        auto x0 = hopf_map(kind, id, zero);
        CHECK(x0 == Vec({0, 0, 0, 0, 1, 1}));
        auto x1 = hopf_map(kind, id, id);
        CHECK(x1 == Vec({2, 0, 0, 0, 0, 2}));
        for (int t = 0; t < 100; ++t) {
            Vec uc(4), vc(4);
            for (auto& z : uc) z = GaussRational(rand_rat());
            for (auto& z : vc) z = GaussRational(rand_rat());
            check_hopf_null(kind, AlgElement(kind, uc), AlgElement(kind, vc));
        }
    }
    CHECK_THROWS(hopf_map(AlgKind::O, AlgElement::identity(AlgKind::O),
                          AlgElement::identity(AlgKind::O)));
    CHECK_THROWS(hopf_map(AlgKind::H, AlgElement::identity(AlgKind::Hsplit),
                          AlgElement::identity(AlgKind::Hsplit)));
}

TEST_CASE("Majorana-Weyl three-forms factor into real null directions") {
    const auto& m = build_model("cl33");
    int done = 0;
    while (done < 20) {
        Vec full(m.dim_spinor);
        for (int i = 0; i < m.half(); ++i) full[i] = rand_gauss();
        Vec rfull = m.Rprime.apply(full);
        Vec maj = add(full, rfull);
        if (vec_zero(maj)) continue;
        auto rep = b3_decomposability(m, maj);
        if (rep.three_form.is_zero()) continue;
        REQUIRE(rep.decomposable);
        REQUIRE(rep.factors.size() == 3);
        for (const auto& f : rep.factors) {
            // each factor is a real null direction dividing the form
            GaussRational norm;
            for (size_t p = 0; p < m.labels.size(); ++p) {
                CHECK(f[p].is_real());
                norm += GaussRational(Rational(m.metric.at(m.labels[p]))) * f[p] * f[p];
            }
            CHECK(norm.is_zero());
            Form vf = one_form(m.labels, f);
            CHECK(wedge(vf, rep.three_form).is_zero());
        }
        // the factors multiply back to the form up to an exact scalar
        Form prod = wedge(one_form(m.labels, rep.factors[0]),
                          wedge(one_form(m.labels, rep.factors[1]),
                                one_form(m.labels, rep.factors[2])));
        GaussRational ratio;
        for (const auto& [mask, c] : rep.three_form.terms()) {
            ratio = c / prod.coeff(mask);
            break;
        }
        CHECK(prod * ratio == rep.three_form);
        ++done;
    }

    CHECK_THROWS(b3_decomposability(m, Vec(m.dim_spinor)));
    Vec notmaj(m.dim_spinor);
    notmaj[0] = I;
    if (m.Rprime.apply(notmaj) != notmaj) CHECK_THROWS(b3_decomposability(m, notmaj));
}
