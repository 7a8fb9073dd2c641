#include <cmath>
#include "abelmom/errors.hpp"
#include "abelmom/profile.hpp"
#include "abelmom/vcoeff.hpp"
#include "doctest.h"

using namespace abelmom;

TEST_CASE("v by the binomial formula: worked values") {
    // abelian squared, ell=2, k=4: v(p^3) = (9-4) = 5
    const auto p2 = registry("abelian", 2, 70);
    const auto v2 = v_from_formula(p2, detect_params(p2), 64);
    CHECK(v2.v[0] == 1);
    CHECK(v2.v[1] == 0);
    CHECK(v2.v[2] == 0);
    CHECK(v2.v[3] == 5);
    CHECK(v2.v[4] == 10);

    // abelian, ell=2, k=2: v(p^3) = (3-2) - (1-1) = 1
    const auto p1 = registry("abelian", 1, 70);
    const auto v1 = v_from_formula(p1, detect_params(p1), 64);
    CHECK(v1.v[1] == 0);
    CHECK(v1.v[2] == 0);
    CHECK(v1.v[3] == 1);
}

TEST_CASE("dual route: formula equals series for every registry profile, r <= 4") {
    for (const char* name : {"abelian", "exp_divisor", "exp_totient"}) {
        for (int r = 1; r <= 4; ++r) {
            const auto prof = registry(name, r, 70);
            const auto params = detect_params(prof);
            const auto a = v_from_formula(prof, params, 64);
            const auto b = v_from_series(prof, params, 64);
            REQUIRE(a.v.size() == b.v.size());
            for (std::size_t i = 0; i < a.v.size(); ++i) REQUIRE(a.v[i] == b.v[i]);
            // zero pattern through nu <= ell
            for (int nu = 1; nu <= params.ell; ++nu)
                REQUIRE(a.v[static_cast<std::size_t>(nu)] == 0);
        }
    }
}

TEST_CASE("finite-range growth of |v| for the abelian profiles") {
    // |v(p^nu)| <= C * 2^{nu/(ell+1)} with a finite fitted constant; this
    // supports (does not prove) the stated convergence abscissa.
    for (int r = 1; r <= 3; ++r) {
        const auto prof = registry("abelian", r, 50);
        const auto v = v_from_formula(prof, detect_params(prof), 40);
        double c_fit = 0;
        for (int nu = 1; nu <= 40; ++nu) {
            const double av = std::abs(v.v[static_cast<std::size_t>(nu)].get_d());
            c_fit = std::max(c_fit, av / std::exp2(nu / 3.0));
        }
        CAPTURE(r);
        CAPTURE(c_fit);
        CHECK(c_fit > 0);
        CHECK(c_fit < 1e9);  // r=3 measures ~1e8; r=4 would exceed this
    }
}

TEST_CASE("expand_v: zero pattern and values") {
    const auto prof = registry("abelian", 2, 70);
    const auto vc = v_from_formula(prof, detect_params(prof), 20);
    const auto t = expand_v(vc, 1000);
    CHECK(t.at(1) == 1);
    CHECK(t.at(8) == 5);  // v(2^3)
    // squarefree n > 1 and n = p^2 all vanish
    CHECK(t.at(2) == 0);
    CHECK(t.at(6) == 0);
    CHECK(t.at(4) == 0);
    CHECK(t.at(9) == 0);
    CHECK(t.at(30) == 0);
    // multiplicative: v(8 * 27) = v(8) v(27)
    CHECK(t.at(216) == t.at(8) * t.at(27));
}

TEST_CASE("v route errors") {
    const auto prof = registry("abelian", 1, 10);
    const auto params = detect_params(prof);
    CHECK_THROWS_AS(v_from_formula(prof, params, 64), ProfileTooShort);
    CHECK_THROWS_AS(v_from_formula(prof, params, 2), TruncationTooShort);
    const auto vc = v_from_formula(prof, params, 8);
    CHECK_THROWS_AS(expand_v(vc, 1000), TruncationTooShort);
}
