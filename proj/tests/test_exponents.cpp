#include "abelmom/errors.hpp"
#include "abelmom/exponents.hpp"
#include "doctest.h"

using namespace abelmom;

TEST_CASE("u_r worked values") {
    CHECK(u_r(3).value == mpq_class(5, 11));  // 15/33 reduced
    CHECK(u_r(2).value == mpq_class(7, 17));
    CHECK(u_r(3).containment == "interior");
}

TEST_CASE("u_kl worked values and the boundary case") {
    CHECK(u_kl(4, 2).value == mpq_class(7, 17));
    CHECK(u_kl(4, 2).containment == "interior");
    CHECK(u_kl(2, 2).value == mpq_class(1, 3));
    CHECK(u_kl(2, 2).containment == "boundary");  // equals 1/(ell+1)
}

TEST_CASE("u_r stays strictly inside (1/3, 1/2) for r in [3, 20]") {
    const mpq_class third(1, 3), half(1, 2);
    for (int r = 3; r <= 20; ++r) {
        const auto e = u_r(r);
        CAPTURE(r);
        REQUIRE(e.value > third);
        REQUIRE(e.value < half);
        REQUIRE(e.containment == "interior");
    }
}

TEST_CASE("u_r equals u_{2^r, 2}") {
    for (int r = 2; r <= 10; ++r) REQUIRE(u_r(r).value == u_kl(1LL << r, 2).value);
}

TEST_CASE("known fixed exponents") {
    const auto known = known_exponents();
    REQUIRE(known.size() == 3);
    CHECK(known[0].value == mpq_class(45, 127));
    CHECK(known[0].log_power == 5);
    CHECK(known[0].containment == "interior");
    CHECK(known[1].value == mpq_class(96, 245));
    CHECK(known[2].value == mpq_class(1, 4));
}

TEST_CASE("reference table for r=2 carries the quadratic-moment entries") {
    const auto entries = reference_exponents_r(2);
    bool has_45_127 = false;
    for (const auto& e : entries)
        if (e.value == mpq_class(45, 127) && e.log_power == 5) has_45_127 = true;
    CHECK(has_45_127);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(u_r(1), CapacityError);
    CHECK_THROWS_AS(u_kl(1, 2), CapacityError);
    CHECK_THROWS_AS(u_kl(2, 1), CapacityError);
}
