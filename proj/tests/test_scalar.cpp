#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clif/scalar.hpp"

using namespace clif;

TEST_CASE("rational construction and canonical form") {
    CHECK(to_string(rat(2, 4)) == "1/2");
    CHECK(to_string(rat(-2, 4)) == "-1/2");
    CHECK(to_string(rat(6, 3)) == "2");
    CHECK(to_string(rat(0, 7)) == "0");
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("rational parsing round trip") {
    for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "1000000000000000000000/13"}) {
        auto r = parse_rational(s);
        REQUIRE(r.has_value());
        CHECK(to_string(*r) == s);
    }
    CHECK(to_string(*parse_rational("4/6")) == "2/3");
    for (const char* s : {"", "a", "1/0", "1/", "/2", "1/-2", "1.5", "1/2/3", "2 "}) {
        CHECK(!parse_rational(s).has_value());
    }
}

TEST_CASE("perfect squares and exact square roots") {
    CHECK(is_square(rat(9, 16)));
    CHECK(*sqrt_exact(rat(9, 16)) == rat(3, 4));
    CHECK(*sqrt_exact(rat(0)) == 0);
    CHECK(!is_square(rat(2)));
    CHECK(!is_square(rat(-1)));
    CHECK(!sqrt_exact(rat(1, 2)).has_value());
    CHECK(*sqrt_exact(rat(225, 4)) == rat(15, 2));
}

TEST_CASE("gaussian rational field operations") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    GaussRational z(rat(1, 2), rat(-3, 4));
    CHECK(z + z.conj() == GaussRational(rat(1)));
    CHECK(z * z.conj() == GaussRational(z.norm2()));
    CHECK(z.norm2() == rat(13, 16));
    CHECK(inverse(z) * z == GaussRational(1));
    CHECK(z / z == GaussRational(1));
    CHECK((z - z).is_zero());
    CHECK_THROWS(inverse(GaussRational()));
    CHECK(to_string(GaussRational(rat(1), rat(-2))) == "1-2*i");
    CHECK(to_string(GaussRational(0, 1)) == "1*i");
    CHECK(to_string(GaussRational(5)) == "5");
}
