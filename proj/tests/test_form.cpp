#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clif/form.hpp"

using namespace clif;

TEST_CASE("monomial sign normalization") {
    CHECK(Form::monomial({5, 4, 1}) == -Form::monomial({1, 4, 5}));
    CHECK(Form::monomial({4, 1}) == -Form::monomial({1, 4}));
    CHECK(Form::monomial({2, 2}).is_zero());
    CHECK(Form::monomial({3, 1, 2}) == Form::monomial({1, 2, 3}));
}

TEST_CASE("wedge and coefficient lookup") {
    Form a = Form::monomial({1}) + Form::monomial({2});
    Form b = Form::monomial({2, 3});
    Form w = wedge(a, b);
    CHECK(w == Form::monomial({1, 2, 3}));
    CHECK(w.coeff({1, 2, 3}) == GaussRational(1));
    CHECK(w.coeff({2, 1, 3}) == GaussRational(-1));
    CHECK(wedge(b, b).is_zero());
    CHECK(wedge(Form::scalar(GaussRational(2)), b) == b * GaussRational(2));
}

TEST_CASE("contraction removes one slot with alternating sign") {
    Form t = Form::monomial({1, 2, 3});
    std::vector<GaussRational> d2(8);
    d2[2] = GaussRational(1);
    CHECK(contract(d2, t) == -Form::monomial({1, 3}));
    std::vector<GaussRational> d1(8);
    d1[1] = GaussRational(1);
    CHECK(contract(d1, t) == Form::monomial({2, 3}));
    // Anti-derivation degree bookkeeping: contracting twice with the same
    // covector gives zero.
    std::vector<GaussRational> v(8);
    v[1] = GaussRational(2);
    v[2] = GaussRational(rat(1, 3));
    v[3] = GaussRational(-1);
    CHECK(contract(v, contract(v, t)).is_zero());
}

TEST_CASE("hodge star in euclidean 7 dims") {
    uint8_t labels7 = 0b11111110;  // labels 1..7
    auto euclid = [](int) { return 1; };
    CHECK(hodge_star(Form::monomial({1, 2, 3}), labels7, euclid) == Form::monomial({4, 5, 6, 7}));
    CHECK(hodge_star(Form::monomial({5, 6, 7}), labels7, euclid) == Form::monomial({1, 2, 3, 4}));
    // star of star on a 3-form in odd euclidean dimension is the identity
    Form c = Form::monomial({5, 6, 7}) + Form::monomial({5, 4, 1}) - Form::monomial({5, 2, 3});
    CHECK(hodge_star(hodge_star(c, labels7, euclid), labels7, euclid) == c);
    CHECK_THROWS(hodge_star(Form::monomial({0}), labels7, euclid));
}

TEST_CASE("hodge star with indefinite metric flips raised signs") {
    uint8_t labels = 0b00000110;  // labels 1, 2
    auto metric = [](int i) { return i == 2 ? -1 : 1; };
    CHECK(hodge_star(Form::monomial({2}), labels, metric) == Form::monomial({1}));
    CHECK(hodge_star(Form::monomial({1}), labels, metric) == Form::monomial({2}));
}

TEST_CASE("real and imaginary parts") {
    Form f = Form::monomial({1}, GaussRational(rat(1), rat(2))) + Form::monomial({2}, GaussRational(0, 1));
    CHECK(f.real_part() == Form::monomial({1}));
    CHECK(f.imag_part() == Form::monomial({1}, GaussRational(2)) + Form::monomial({2}));
    CHECK(f.conj_coeffs() + f == f.real_part() * GaussRational(2));
    CHECK(f.degree_part(1) == f);
    CHECK(f.degree_part(2).is_zero());
}
