#include <cmath>
#include <random>

#include "abelmom/errors.hpp"
#include "abelmom/euler_product.hpp"
#include "abelmom/profile.hpp"
#include "doctest.h"

using namespace abelmom;

// Independently computed (50-digit arithmetic) reference values.
namespace {
constexpr double kA1 = 2.294856591673313794183516;
constexpr double kA2 = -14.64756630163831131699976;
constexpr double kA3 = 118.692461972764284626167;
constexpr double kC2 = 38.93367139689272746327;
constexpr double kC3 = 92622.86283376550206434;
}  // namespace

TEST_CASE("local constant series coefficients") {
    const auto p = registry("abelian", 1, 10);
    const auto s = local_constant_series(p, 6);
    // 1, 0, 1, 1, 2, 2 (differences of partition numbers)
    CHECK(s.c[0] == 1);
    CHECK(s.c[1] == 0);
    CHECK(s.c[2] == 1);
    CHECK(s.c[3] == 1);
    CHECK(s.c[4] == 2);
    CHECK(s.c[5] == 2);

    const auto p2 = registry("abelian", 2, 10);
    const auto s2 = local_constant_series(p2, 6);
    CHECK(s2.c[2] == 3);
    CHECK(s2.c[3] == 5);
    CHECK(s2.c[4] == 16);
    CHECK(s2.c[5] == 24);

    const auto one = registry("one", 1, 10);
    const auto s3 = local_constant_series(one, 6);
    for (int i = 1; i <= 6; ++i) CHECK(s3.c[static_cast<std::size_t>(i)] == 0);
}

TEST_CASE("zeta factorization peels the abelian series to all-ones exponents") {
    const auto p = registry("abelian", 1, 40);
    const auto f = zeta_factorize(local_constant_series(p, 32));
    CHECK(f.e[1] == 0);
    for (int j = 2; j <= 32; ++j) {
        CAPTURE(j);
        CHECK(f.e[static_cast<std::size_t>(j)] == 1);
    }
}

TEST_CASE("zeta factorization round-trips random unit series") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        LocalSeries s = LocalSeries::one(16);
        for (int i = 1; i <= 16; ++i)
            s.c[static_cast<std::size_t>(i)] = static_cast<long>(rng() % 11) - 5;
        const auto f = zeta_factorize(s);
        const auto back = f.reconstruct();
        for (int i = 0; i <= 16; ++i)
            REQUIRE(back.c[static_cast<std::size_t>(i)] == s.c[static_cast<std::size_t>(i)]);
    }
    LocalSeries bad;
    bad.c = {mpz_class(2), mpz_class(1)};
    CHECK_THROWS_AS(zeta_factorize(bad), NonUnitSeries);
}

TEST_CASE("constant-one profile gives exactly 1") {
    const auto one = registry("one", 1, 40);
    const auto r = euler_product(one);
    CHECK(r.value == 1.0);
    CHECK(r.tail_bound == 0.0);
    const auto rd = euler_product_direct(one);
    CHECK(rd.value == 1.0);
}

TEST_CASE("A constants match the reference digits, with honest bounds") {
    const auto a = a_constants(1e-10);
    CHECK(std::abs(a.a1.value - kA1) < 1e-10);
    CHECK(std::abs(a.a2.value - kA2) < 1e-9);   // |A2| ~ 14.6, relative ~1e-15
    CHECK(std::abs(a.a3.value - kA3) < 1e-8);
    CHECK(a.a2.value < 0);
    CHECK(a.a3.value > 0);
    CHECK(a.a1.tail_bound < 1e-10);
    CHECK(std::abs(a.a1.value - kA1) < a.a1.tail_bound + 1e-12);
}

TEST_CASE("enlarging K moves A_1 by less than the reported bound") {
    const auto coarse = a_constants(1e-6);
    const auto fine = a_constants(1e-12);
    CHECK(fine.a1.series_order > coarse.a1.series_order);
    CHECK(std::abs(coarse.a1.value - fine.a1.value) < coarse.a1.tail_bound);
    CHECK(std::abs(coarse.a3.value - fine.a3.value) < coarse.a3.tail_bound);
}

TEST_CASE("C_f(abelian, r=1) equals A_1: the decisive cross-check") {
    const auto p = registry("abelian", 1, 128);
    EulerProductOptions opts;
    opts.series_order = 48;
    opts.tol = 1e-9;
    const auto c = euler_product(p, opts);
    const auto a = a_constants(1e-10);
    CHECK(c.tail_bound < 1e-9);
    CHECK(std::abs(c.value - a.a1.value) < 1e-8);
    CHECK(std::abs(c.value - kA1) < 1e-9);
}

TEST_CASE("C_2 and C_3 against the independent references") {
    EulerProductOptions opts;
    opts.series_order = 32;
    opts.tol = 1e-8;
    const auto p2 = registry("abelian", 2, 160);
    const auto c2 = euler_product(p2, opts);
    CHECK(c2.tail_bound < 1e-9 * std::abs(c2.value) + 1e-9);
    CHECK(std::abs(c2.value - kC2) < 1e-9);

    EulerProductOptions opts3;
    opts3.series_order = 32;
    opts3.tol = 1e-2;
    const auto p3 = registry("abelian", 3, 300);
    const auto c3 = euler_product(p3, opts3);
    CHECK(std::abs(c3.value - kC3) < 1e-4);
}

TEST_CASE("value is stable under (P, J) -> (10P, J+8)") {
    const auto p2 = registry("abelian", 2, 160);
    EulerProductOptions a{.prime_limit = 10000, .series_order = 32, .tol = 1e-6};
    EulerProductOptions b{.prime_limit = 100000, .series_order = 40, .tol = 1e-6};
    const auto ra = euler_product(p2, a);
    const auto rb = euler_product(p2, b);
    CHECK(std::abs(ra.value - rb.value) <= ra.tail_bound + rb.tail_bound);
}

TEST_CASE("direct and accelerated agree within summed tail bounds, r <= 3") {
    for (const char* name : {"abelian", "exp_divisor", "exp_totient"}) {
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(name);
            CAPTURE(r);
            const auto prof = registry(name, r, 300);
            EulerProductOptions accel{.prime_limit = 20000, .series_order = 24, .tol = 1e30};
            EulerProductOptions direct{.prime_limit = 100000, .series_order = 0, .tol = 1e30};
            const auto ra = euler_product(prof, accel);
            const auto rd = euler_product_direct(prof, direct);
            REQUIRE(std::abs(ra.value - rd.value) <= ra.tail_bound + rd.tail_bound);
            // and the bounds are not vacuous for the accelerated route
            CHECK(ra.tail_bound < 1e-2 * std::abs(ra.value));
        }
    }
}

TEST_CASE("enlarging P moves the direct value by less than its bound") {
    const auto p = registry("abelian", 1, 128);
    EulerProductOptions small{.prime_limit = 2000, .series_order = 0, .tol = 1e30};
    EulerProductOptions big{.prime_limit = 40000, .series_order = 0, .tol = 1e30};
    const auto rs = euler_product_direct(p, small);
    const auto rb = euler_product_direct(p, big);
    CHECK(std::abs(rs.value - rb.value) < rs.tail_bound);
}

TEST_CASE("inapplicable and tolerance errors") {
    CHECK_THROWS_AS(euler_product(custom_profile({mpz_class(1), mpz_class(2), mpz_class(3)})),
                    InapplicableTheorem);
    const auto p = registry("abelian", 1, 128);
    EulerProductOptions too_tight{.prime_limit = 100, .series_order = 16, .tol = 1e-30};
    CHECK_THROWS_AS(euler_product(p, too_tight), ToleranceUnreachable);
    EulerProductOptions bad_p{.prime_limit = 10, .series_order = 16, .tol = 1e-3};
    CHECK_THROWS_AS(euler_product(p, bad_p), CapacityError);
}
