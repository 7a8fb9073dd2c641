#include "abelmom/errors.hpp"
#include "abelmom/profile.hpp"
#include "doctest.h"

using namespace abelmom;

TEST_CASE("registry abelian r=1") {
    const auto p = registry("abelian", 1, 8);
    CHECK(p.values[0] == 1);
    CHECK(p.values[1] == 1);
    CHECK(p.values[2] == 2);
    CHECK(p.values[3] == 3);
    CHECK(p.values[4] == 5);
    CHECK(p.values[5] == 7);
    const auto params = detect_params(p);
    CHECK(params.ell == 2);
    CHECK(params.k == 2);
}

TEST_CASE("registry abelian r=2 squares the profile") {
    const auto p = registry("abelian", 2, 5);
    CHECK(p.values[2] == 4);
    CHECK(p.values[3] == 9);
    CHECK(p.values[4] == 25);
    CHECK(p.values[5] == 49);
    const auto params = detect_params(p);
    CHECK(params.ell == 2);
    CHECK(params.k == 4);
}

TEST_CASE("registry exp_divisor") {
    const auto p = registry("exp_divisor", 1, 6);
    // d(nu): 1,2,2,3,2,4
    CHECK(p.values[1] == 1);
    CHECK(p.values[2] == 2);
    CHECK(p.values[3] == 2);
    CHECK(p.values[4] == 3);
    CHECK(p.values[5] == 2);
    CHECK(p.values[6] == 4);
    const auto params = detect_params(p);
    CHECK(params.ell == 2);
    CHECK(params.k == 2);
}

TEST_CASE("registry exp_totient has ell=3") {
    const auto p = registry("exp_totient", 1, 5);
    CHECK(p.values[1] == 1);
    CHECK(p.values[2] == 1);
    CHECK(p.values[3] == 2);
    CHECK(p.values[4] == 2);
    CHECK(p.values[5] == 4);
    const auto params = detect_params(p);
    CHECK(params.ell == 3);
    CHECK(params.k == 2);
}

TEST_CASE("detect_params rejects bad profiles") {
    CHECK_THROWS_AS(detect_params(registry("one", 1, 8)), InapplicableTheorem);
    CHECK_THROWS_AS(detect_params(custom_profile({mpz_class(1), mpz_class(3), mpz_class(2)})),
                    InapplicableTheorem);
    // k must be >= 2: g = [1, 1, 0, ...] has g(ell) = 0
    CHECK_THROWS_AS(detect_params(custom_profile({mpz_class(1), mpz_class(1), mpz_class(0)})),
                    InapplicableTheorem);
}

TEST_CASE("custom profile validation") {
    CHECK_THROWS_AS(custom_profile({mpz_class(2)}), MalformedProfile);
    CHECK_THROWS_AS(registry("nope", 1), UnknownFunction);
    CHECK_THROWS_AS(registry("abelian", 0), UnknownFunction);
}
