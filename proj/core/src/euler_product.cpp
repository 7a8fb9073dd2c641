#include "abelmom/euler_product.hpp"

#include <algorithm>
#include <cmath>

#include "abelmom/errors.hpp"
#include "abelmom/factor.hpp"
#include "abelmom/partition.hpp"
#include "abelmom/zeta.hpp"

namespace abelmom {

// ---------------------------------------------------------------------------
// Math notes (error budget for the product evaluators)
//
// Write L_p = 1 + sum_{nu>=2} dg(nu) p^{-nu} with dg(nu) = g(nu) - g(nu-1),
// and C = prod_p L_p.  With exponents e_j from the order-J factorization
// L(t) = prod_{j<=J} (1-t^j)^{-e_j} mod t^{J+1}, the regrouping
//
//   C = prod_{j=2..J} zeta(j)^{e_j} * prod_p M_p,
//   M_p = L_p * prod_{j=2..J} (1-p^{-j})^{e_j},
//
// is an identity for every finite J, because each zeta(j)^{e_j} cancels
// prod_p (1-p^{-j})^{e_j} exactly.  log M_p = sum_{j>J} e_j sum_m p^{-jm}/m,
// so M_p = 1 + O(p^{-(J+1)}) and the only truncation is dropping p > P.
//
// Error terms, all accumulated in log space (ln C):
//
//  (T1) profile truncation: the profile stops at M = nu_max, so each
//       computed L_p misses sum_{nu>M} dg(nu) p^{-nu}.  The missing mass at
//       p = 2 is bounded through the declared growth family:
//         partition_pow(r):  |dg(nu)| <= 2 e^{r pi sqrt(2 nu/3)}, so the
//             tail is <= 2 e^{r pi sqrt(2(M+1)/3)} 2^{-(M+1)} / (1 - q),
//             q = e^{r pi sqrt(2/3) / (2 sqrt(M+1))} / 2  (must be < 1;
//             consecutive-term ratios decrease, so the geometric majorant
//             is valid);
//         polynomial(d):     |dg(nu)| <= 2 s nu^d with s read off the
//             profile, tail <= 2 s (M+1)^d 2^{-(M+1)} / (1 - e^{d/(M+1)}/2)
//             (needs M+1 > d/ln 2);
//         constant:          0;
//         unknown:           observed-ratio extrapolation with
//             rho_g = max |dg(nu+1)/dg(nu)| over the profile tail,
//             demanding rho_g < 2.
//       The p > 2 terms scale by (2/p)^{M+1}, so the sum over p <= P stays
//       within 2x the p = 2 term.
//
//  (T2) dropped p > P:  with rho_e = max |e_{j+1}/e_j| near j = J
//       (extrapolating |e_{J+i}| <= |e_J| rho_e^i, rho_e << P),
//         sum_{p>P} |ln M_p| <= 2 |e_J| rho_e / (1 - rho_e/P) * sum_{p>P} p^{-(J+1)}
//       and sum_{p>P} p^{-(J+1)} <= P^{-J}/J.
//
//  (T3) evaluation noise: every added log term is tracked in magnitude
//       (mag = sum |term|); zeta logs carry a few ulp relative error
//       (ln_zeta_int is relatively accurate by construction) and the prime
//       loop uses compensated summation, giving 8 eps * mag as a generous
//       absolute cover for (ln C) rounding.
//
//  Direct product (no zeta pullout): the tail over p > P uses
//       |L_p - 1| <= c1 p^{-ell},  c1 = 2^{ell} * sum_nu |dg(nu)| 2^{-nu} * slack,
//       |ln L_p| <= 2 |L_p - 1| once c1 P^{-ell} <= 1/2, hence
//       sum_{p>P} |ln L_p| <= 2 c1 P^{1-ell}/(ell-1).
//
//  A_j products: for k/j >= 3, 0 <= ln zeta(k/j) <= zeta(k/j) - 1 <= 2^{1-k/j}
//       (the 2^{1-m} majorant is valid for m >= 3; it fails marginally at
//       m = 2, where zeta(2)-1 = 0.645 > 0.5, so it is only applied from
//       m >= 3 on), giving the geometric tail
//       sum_{k>K} 2^{1-k/j} = 2^{1-(K+1)/j} / (1 - 2^{-1/j}).
//
// The final bound is |C| * expm1(sum of ln-space bounds).  These are
// documented inequalities evaluated in floating point, not interval
// arithmetic.
// ---------------------------------------------------------------------------

namespace {

struct KahanSum {
    double sum = 0, comp = 0, mag = 0;

    void add(double x) {
        mag += std::abs(x);
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct DeltaG {
    std::vector<mpz_class> dg;     // dg[nu] = g(nu) - g(nu-1), nu = 1..nu_max
    std::vector<double> dg_dbl;    // rounded
    int first_nonzero = 0;         // 0 when all zero

    int nu_max() const { return static_cast<int>(dg.size()) - 1; }
};

DeltaG delta_g(const Profile& profile) {
    profile.validate();
    DeltaG out;
    const int n = profile.nu_max();
    out.dg.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
    out.dg_dbl.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int nu = 1; nu <= n; ++nu) {
        out.dg[static_cast<std::size_t>(nu)] =
            profile.values[static_cast<std::size_t>(nu)] - profile.values[static_cast<std::size_t>(nu - 1)];
        out.dg_dbl[static_cast<std::size_t>(nu)] = out.dg[static_cast<std::size_t>(nu)].get_d();
        if (out.first_nonzero == 0 && out.dg[static_cast<std::size_t>(nu)] != 0)
            out.first_nonzero = nu;
        if (std::abs(out.dg_dbl[static_cast<std::size_t>(nu)]) > 1e290)
            throw CapacityError("euler_product: profile values exceed double range");
    }
    return out;
}

// Bound on the missing mass sum_{nu > nu_max} |dg(nu)| 2^{-nu}; see (T1) in
// the math notes.  Throws when the profile is too short to control its own
// declared growth.
double profile_tail_p2(const Profile& profile, const DeltaG& d) {
    const int m1 = profile.nu_max() + 1;  // first missing index
    switch (profile.growth) {
        case Growth::constant:
            return 0.0;
        case Growth::partition_pow: {
            const double r = profile.growth_param;
            const double q = std::exp(r * M_PI * std::sqrt(2.0 / 3.0) / (2.0 * std::sqrt(m1))) / 2.0;
            if (!(q < 1.0))
                throw ToleranceUnreachable(
                    "euler_product: profile too short for its partition-power growth; extend it");
            const double ln_head = r * M_PI * std::sqrt(2.0 * m1 / 3.0) - m1 * M_LN2;
            return 2.0 * std::exp(ln_head) / (1.0 - q) + 1e-300;
        }
        case Growth::polynomial: {
            const double deg = profile.growth_param;
            double scale = 1.0;
            for (int nu = 1; nu <= profile.nu_max(); ++nu)
                scale = std::max(scale, std::abs(profile.values[static_cast<std::size_t>(nu)].get_d()) /
                                            std::pow(nu, deg));
            const double q = std::exp(deg / m1) / 2.0;
            if (!(q < 1.0))
                throw ToleranceUnreachable(
                    "euler_product: profile too short for its polynomial growth; extend it");
            const double ln_head = deg * std::log(m1) - m1 * M_LN2;
            return 2.0 * scale * std::exp(ln_head) / (1.0 - q) + 1e-300;
        }
        case Growth::unknown:
        default: {
            if (d.first_nonzero == 0) return 0.0;
            const int n = profile.nu_max();
            const int window_lo = std::max(d.first_nonzero, n - std::max(8, n / 4));
            double rho = 0;
            for (int nu = window_lo; nu < n; ++nu) {
                const double a = std::abs(d.dg_dbl[static_cast<std::size_t>(nu)]);
                const double b = std::abs(d.dg_dbl[static_cast<std::size_t>(nu + 1)]);
                if (a > 0 && b > 0) rho = std::max(rho, b / a);
            }
            if (!(rho < 2.0))
                throw ToleranceUnreachable(
                    "euler_product: undeclared profile growth with tail ratio >= 2; declare a "
                    "growth family or extend the profile");
            double head = 1e-300;
            const mpz_class& last = d.dg[static_cast<std::size_t>(n)];
            if (last != 0)
                head = std::max(std::exp(log_mpz(mpz_class(abs(last))) - n * M_LN2), 1e-300);
            return head * (rho / 2.0) / (1.0 - rho / 2.0) + 1e-300;
        }
    }
}

// ln L_p and the magnitude of its terms; throws if L_p <= 0.
double ln_local_factor(const DeltaG& d, double p, double* mag_out) {
    const double inv_p = 1.0 / p;
    double t = inv_p;  // p^{-nu}
    KahanSum s;
    s.add(1.0);
    for (int nu = 1; nu <= d.nu_max(); ++nu) {
        const double c = d.dg_dbl[static_cast<std::size_t>(nu)];
        if (c != 0.0 && t != 0.0) s.add(c * t);
        t *= inv_p;
    }
    if (!(s.sum > 0))
        throw ToleranceUnreachable("euler_product: local factor not positive at p=" +
                                   std::to_string(static_cast<long long>(p)));
    if (mag_out) *mag_out = s.mag;
    return std::log(s.sum);
}

double ptail_sum_bound(double P, int s_minus_1) {
    // sum_{p>P} p^{-(s_minus_1+1)} <= P^{-s_minus_1} / s_minus_1
    return std::exp(-static_cast<double>(s_minus_1) * std::log(P)) / s_minus_1;
}

EulerProductResult finish(double ln_abs, int sign, double ln_bound_total,
                          std::uint64_t P, int J, ProductMethod method, double tol,
                          const char* what) {
    EulerProductResult r;
    r.ln_abs = ln_abs;
    r.value = sign * std::exp(ln_abs);
    r.prime_limit = P;
    r.series_order = J;
    r.method = method;
    r.tail_bound = std::abs(r.value) * std::expm1(ln_bound_total);
    if (r.tail_bound > tol)
        throw ToleranceUnreachable(std::string(what) + ": certified bound " +
                                   std::to_string(r.tail_bound) + " exceeds tol " +
                                   std::to_string(tol) + " with the given (P, J)");
    return r;
}

}  // namespace

LocalSeries local_constant_series(const Profile& profile, int J) {
    profile.validate();
    if (profile.nu_max() < J)
        throw ProfileTooShort("local_constant_series: profile must cover order J");
    LocalSeries s = LocalSeries::one(J);
    for (int nu = 1; nu <= J; ++nu)
        s.c[static_cast<std::size_t>(nu)] = profile.values[static_cast<std::size_t>(nu)] -
                                            profile.values[static_cast<std::size_t>(nu - 1)];
    return s;
}

ZetaFactorization zeta_factorize(const LocalSeries& series) {
    if (!series.is_unit()) throw NonUnitSeries("zeta_factorize: series must start with 1");
    const int J = series.order();
    ZetaFactorization f;
    f.e.assign(static_cast<std::size_t>(J) + 1, mpz_class(0));
    LocalSeries cur = series;
    for (int j = 1; j <= J; ++j) {
        const mpz_class ej = cur.c[static_cast<std::size_t>(j)];
        f.e[static_cast<std::size_t>(j)] = ej;
        if (ej != 0) cur = cur.mul(LocalSeries::one_minus_tj_pow(j, ej, J), J);
    }
    return f;
}

LocalSeries ZetaFactorization::reconstruct() const {
    const int J = order();
    LocalSeries acc = LocalSeries::one(J);
    for (int j = 1; j <= J; ++j) {
        const mpz_class& ej = e[static_cast<std::size_t>(j)];
        if (ej != 0) acc = acc.mul(LocalSeries::one_minus_tj_pow(j, -ej, J), J);
    }
    return acc;
}

EulerProductResult euler_product(const Profile& profile, const EulerProductOptions& opts) {
    const std::uint64_t P = opts.prime_limit;
    const int J = opts.series_order;
    if (P < 100) throw CapacityError("euler_product: prime_limit must be >= 100");
    if (P > (std::uint64_t(1) << 31)) throw CapacityError("euler_product: prime_limit too large");
    const DeltaG d = delta_g(profile);
    if (d.first_nonzero == 1)
        throw InapplicableTheorem("euler_product: profile has g(1) != 1");
    if (d.first_nonzero == 0) {
        // constant-one profile: empty product
        EulerProductResult r;
        r.value = 1.0;
        r.ln_abs = 0.0;
        r.prime_limit = P;
        r.series_order = J;
        r.method = ProductMethod::zeta_accelerated;
        r.tail_bound = 0.0;
        return r;
    }
    if (J < d.first_nonzero + 2)
        throw TruncationTooShort("euler_product: series_order must be >= ell+2");
    if (profile.nu_max() < J)
        throw ProfileTooShort("euler_product: profile must cover series_order");
    const double tail_p2 = profile_tail_p2(profile, d);

    const ZetaFactorization fac = zeta_factorize(local_constant_series(profile, J));
    if (fac.e[1] != 0)
        throw InapplicableTheorem("euler_product: factorization has a zeta(1) factor");

    // zeta part
    KahanSum ln_c;
    std::vector<double> e_dbl(static_cast<std::size_t>(J) + 1, 0.0);
    for (int j = 2; j <= J; ++j) {
        e_dbl[static_cast<std::size_t>(j)] = fac.e[static_cast<std::size_t>(j)].get_d();
        if (e_dbl[static_cast<std::size_t>(j)] != 0.0)
            ln_c.add(e_dbl[static_cast<std::size_t>(j)] * ln_zeta_int(j));
    }

    // corrected prime part
    const auto primes = primes_up_to(static_cast<std::uint32_t>(P));
    double mag_extra = 0;  // interior term magnitudes, counted once
    double l_min = 1.0;
    for (const std::uint32_t p : primes) {
        const double pd = static_cast<double>(p);
        double mag = 0;
        KahanSum lnM;
        const double lnL = ln_local_factor(d, pd, &mag);
        l_min = std::min(l_min, std::exp(lnL));
        lnM.add(lnL);
        const double inv_p = 1.0 / pd;
        double tj = inv_p * inv_p;  // p^{-j}, j starting at 2
        for (int j = 2; j <= J; ++j) {
            const double ej = e_dbl[static_cast<std::size_t>(j)];
            if (ej != 0.0 && tj != 0.0) lnM.add(ej * std::log1p(-tj));
            tj *= inv_p;
        }
        ln_c.add(lnM.sum);
        mag_extra += lnM.mag + mag;
    }

    // ---- error budget (see math notes) ----
    double ln_bound = 0;
    // (T1) profile truncation, summed over p (2x the p=2 term, scaled when
    // some local factor dips below 1)
    ln_bound += 2.0 * tail_p2 / l_min;
    // (T2) dropped p > P
    double rho_e = 0;
    {
        const int window_lo = std::max(2, J - std::max(4, J / 4));
        for (int j = window_lo; j < J; ++j) {
            const double a = std::abs(e_dbl[static_cast<std::size_t>(j)]);
            const double b = std::abs(e_dbl[static_cast<std::size_t>(j + 1)]);
            if (a > 0 && b > 0) rho_e = std::max(rho_e, b / a);
        }
        rho_e = std::max(rho_e, 1.0);
        const mpz_class& eJ = fac.e[static_cast<std::size_t>(J)];
        double abs_eJ = 1.0;
        if (eJ != 0) abs_eJ = std::max(std::exp(log_mpz(mpz_class(abs(eJ)))), 1.0);
        ln_bound += 2.0 * abs_eJ * rho_e / (1.0 - rho_e / static_cast<double>(P)) *
                    ptail_sum_bound(static_cast<double>(P), J);
    }
    // (T3) rounding cover
    ln_bound += 8.0 * 2.220446049250313e-16 * (ln_c.mag + mag_extra / l_min);

    return finish(ln_c.sum, 1, ln_bound, P, J, ProductMethod::zeta_accelerated, opts.tol,
                  "euler_product");
}

EulerProductResult euler_product_direct(const Profile& profile, const EulerProductOptions& opts) {
    const std::uint64_t P = opts.prime_limit;
    if (P < 100) throw CapacityError("euler_product_direct: prime_limit must be >= 100");
    if (P > (std::uint64_t(1) << 31)) throw CapacityError("euler_product_direct: prime_limit too large");
    const DeltaG d = delta_g(profile);
    if (d.first_nonzero == 1)
        throw InapplicableTheorem("euler_product_direct: profile has g(1) != 1");
    if (d.first_nonzero == 0) {
        EulerProductResult r;
        r.value = 1.0;
        r.prime_limit = P;
        r.method = ProductMethod::direct;
        r.tail_bound = 0.0;
        return r;
    }
    const double tail_p2 = profile_tail_p2(profile, d);
    const int ell = d.first_nonzero;

    KahanSum ln_c;
    double mag_extra = 0;
    double l_min = 1.0;
    const auto primes = primes_up_to(static_cast<std::uint32_t>(P));
    for (const std::uint32_t p : primes) {
        double mag = 0;
        const double lnL = ln_local_factor(d, static_cast<double>(p), &mag);
        l_min = std::min(l_min, std::exp(lnL));
        ln_c.add(lnL);
        mag_extra += mag;
    }

    // c1 = 2^ell * sum_nu |dg(nu)| 2^{-nu}, plus the profile-tail slack
    double c1 = 0;
    {
        double t = 0.5;
        KahanSum s;
        for (int nu = 1; nu <= d.nu_max(); ++nu) {
            const double c = std::abs(d.dg_dbl[static_cast<std::size_t>(nu)]);
            if (c != 0.0 && t != 0.0) s.add(c * t);
            t *= 0.5;
        }
        c1 = std::ldexp(s.sum + tail_p2, ell);
    }
    double ln_bound = 0;
    const double tail_sum = c1 * ptail_sum_bound(static_cast<double>(P), ell - 1);
    if (c1 * std::exp(-static_cast<double>(ell) * std::log(static_cast<double>(P))) > 0.5)
        throw ToleranceUnreachable("euler_product_direct: prime_limit too small for the bound");
    ln_bound += 2.0 * tail_sum;
    ln_bound += 2.0 * tail_p2 / l_min;
    ln_bound += 8.0 * 2.220446049250313e-16 * (ln_c.mag + mag_extra / l_min);

    return finish(ln_c.sum, 1, ln_bound, P, 0, ProductMethod::direct, opts.tol,
                  "euler_product_direct");
}

namespace {

EulerProductResult a_constant(int j, double tol) {
    // prod over k >= 1, k != j of zeta(k/j); negative factors come only from
    // the arguments below 1 (k < j).
    KahanSum ln_abs;
    int sign = 1;
    int K = std::max(8 * j, 3 * j + 1);
    double tail = 0;
    // ln-space target: |A_j| <= 119ish, so ask the geometric tail for a
    // factor ~1024 beyond tol before exponentiating
    for (;;) {
        // geometric majorant: sum_{k>K} 2^{1-k/j} (valid because k/j >= 3 there)
        tail = std::exp2(1.0 - static_cast<double>(K + 1) / j) /
               (1.0 - std::exp2(-1.0 / static_cast<double>(j)));
        if (tail < tol / 1024 || K >= 6000) break;
        K += j;
    }
    for (int k = 1; k <= K; ++k) {
        if (k == j) continue;
        const double s = static_cast<double>(k) / j;
        if (s > 1) {
            ln_abs.add(std::log1p(zeta_minus_one(s)));
        } else {
            const double z = zeta_borwein(s);
            if (z < 0) sign = -sign;
            ln_abs.add(std::log(std::abs(z)));
        }
    }
    double ln_bound = tail;
    ln_bound += 8.0 * 2.220446049250313e-16 * ln_abs.mag;
    ln_bound += 2e-14 * j;  // Borwein factors for the k<j arguments
    EulerProductResult r;
    r.ln_abs = ln_abs.sum;
    r.value = sign * std::exp(ln_abs.sum);
    r.prime_limit = 0;
    r.series_order = K;
    r.method = ProductMethod::zeta_accelerated;
    r.tail_bound = std::abs(r.value) * std::expm1(ln_bound);
    if (r.tail_bound > tol)
        throw ToleranceUnreachable("a_constants: bound exceeds tol");
    return r;
}

}  // namespace

AConstants a_constants(double tol) {
    return AConstants{a_constant(1, tol), a_constant(2, tol), a_constant(3, tol)};
}

}  // namespace abelmom
