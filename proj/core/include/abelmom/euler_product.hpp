#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "abelmom/local_series.hpp"
#include "abelmom/profile.hpp"

namespace abelmom {

// Per-prime factor of the mean-value constant:
//   1 + sum_{nu>=1} (g(nu) - g(nu-1)) t^nu,   t = 1/p,
// truncated at order J.  (Coefficients below the first index with
// g(nu) != g(nu-1) are zero automatically.)
LocalSeries local_constant_series(const Profile& profile, int J);

// Integer exponents e_j with  series == prod_{j<=J} (1-t^j)^{-e_j}  mod t^{J+1},
// obtained by peeling: e_j is the residual coefficient of t^j, which is then
// cleared by multiplying with (1-t^j)^{e_j}.
struct ZetaFactorization {
    std::vector<mpz_class> e;  // e[0] unused, e[1..J]

    int order() const { return static_cast<int>(e.size()) - 1; }
    LocalSeries reconstruct() const;  // prod (1-t^j)^{-e_j} mod t^{J+1}
};

ZetaFactorization zeta_factorize(const LocalSeries& series);

enum class ProductMethod { direct, zeta_accelerated };

// A constant together with the truncation parameters that produced it and a
// rigorous (documented-inequality) bound on the truncation + rounding error.
struct EulerProductResult {
    double value = 0;
    double ln_abs = 0;          // log |value|
    std::uint64_t prime_limit = 0;
    int series_order = 0;
    double tail_bound = 0;      // absolute bound on |value - limit|
    ProductMethod method = ProductMethod::direct;
};

struct EulerProductOptions {
    std::uint64_t prime_limit = 100000;
    int series_order = 32;
    double tol = 1e-9;  // demanded certified accuracy; ToleranceUnreachable if missed
};

// C_f by the accelerated scheme
//   C_f = prod_{j=2..J} zeta(j)^{e_j} * prod_{p<=P} [ L_p * prod_j (1-p^{-j})^{e_j} ],
// exact as a regrouping for every finite J; see the math notes in the
// implementation for the error budget.
EulerProductResult euler_product(const Profile& profile, const EulerProductOptions& opts = {});

// Plain truncated product prod_{p<=P} L_p, for cross-checking.  Converges
// like sum_{p>P} p^{-ell}, so demand tolerances accordingly.
EulerProductResult euler_product_direct(
    const Profile& profile,
    const EulerProductOptions& opts = {.prime_limit = 100000, .series_order = 0, .tol = 1e-3});

// A_j = prod_{k>=1, k!=j} zeta(k/j) for j = 1, 2, 3, as truncated products
// with tail bounds; the j=2,3 products contain zeta arguments in (0,1).
struct AConstants {
    EulerProductResult a1, a2, a3;
};

AConstants a_constants(double tol = 1e-10);

}  // namespace abelmom
