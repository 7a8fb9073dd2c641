#include <cmath>

#include "abelmom/errors.hpp"
#include "abelmom/zeta.hpp"
#include "doctest.h"

using namespace abelmom;

TEST_CASE("closed forms at even integers") {
    const double pi = M_PI;
    CHECK(std::abs(zeta_real(2) - pi * pi / 6) < 1e-12);
    CHECK(std::abs(zeta_real(4) - pi * pi * pi * pi / 90) < 1e-12);
    CHECK(std::abs(zeta_real(6) - std::pow(pi, 6) / 945) < 1e-12);
}

TEST_CASE("the two schemes agree on both sides of s = 1") {
    for (double s : {0.1, 0.25, 0.5, 0.75, 0.9, 1.1, 1.5, 2.0, 3.0, 7.5, 20.0}) {
        CAPTURE(s);
        CHECK(std::abs(zeta_borwein(s) - zeta_euler_maclaurin(s)) < 1e-10);
    }
}

TEST_CASE("zeta(1/2) reference value") {
    // independently computed to 30 digits
    const double ref = -1.46035450880958681288949915252;
    CHECK(std::abs(zeta_borwein(0.5) - ref) < 1e-13);
    CHECK(std::abs(zeta_euler_maclaurin(0.5) - ref) < 1e-13);
    CHECK(std::abs(zeta_real(0.5) - ref) < 1e-12);
}

TEST_CASE("zeta_minus_one keeps relative accuracy for large s") {
    // zeta(60) - 1 = 2^-60 (1 + (2/3)^60 + ...) ~ 8.67e-19
    const double z = zeta_minus_one(60);
    CHECK(z > 0);
    CHECK(std::abs(z / 8.673617380119933e-19 - 1.0) < 1e-12);
    CHECK(ln_zeta_int(60) == doctest::Approx(z).epsilon(1e-12));
    // and ln zeta at small integers
    CHECK(ln_zeta_int(2) == doctest::Approx(std::log(M_PI * M_PI / 6)).epsilon(1e-14));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(zeta_real(1.0), PoleAtOne);
    CHECK_THROWS_AS(zeta_real(0.0), UnsupportedDomain);
    CHECK_THROWS_AS(zeta_real(-2.0), UnsupportedDomain);
    CHECK_THROWS_AS(zeta_real(2.0, 1e-20), ToleranceUnreachable);
    CHECK_THROWS_AS(ln_zeta_int(1), UnsupportedDomain);
}
