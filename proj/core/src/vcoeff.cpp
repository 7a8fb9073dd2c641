#include "abelmom/vcoeff.hpp"

#include "abelmom/errors.hpp"
#include "abelmom/factor.hpp"

namespace abelmom {

VCoefficients v_from_formula(const Profile& profile, const TheoremParams& params, int J) {
    if (J < params.ell + 1)
        throw TruncationTooShort("v_from_formula: need J >= ell+1");
    if (profile.nu_max() < J)
        throw ProfileTooShort("v_from_formula: profile must cover index J");
    VCoefficients out;
    out.params = params;
    out.source = "formula";
    out.v.assign(static_cast<std::size_t>(J) + 1, mpz_class(0));
    out.v[0] = 1;

    auto f = [&](long long m) -> mpz_class {
        if (m < 0) return mpz_class(0);
        return profile.at(static_cast<int>(m));
    };

    for (int nu = params.ell + 1; nu <= J; ++nu) {
        mpz_class acc = 0;
        mpz_class binom = 1;  // binom(k-1, j), updated incrementally
        for (long long j = 0; j < params.k; ++j) {
            const long long m = nu - j * params.ell;
            if (m < 0) break;  // every later term vanishes too
            const mpz_class term = f(m) - f(m - 1);
            if ((j % 2) == 0)
                acc += binom * term;
            else
                acc -= binom * term;
            binom *= static_cast<long>(params.k - 1 - j);
            binom /= static_cast<long>(j + 1);
        }
        out.v[static_cast<std::size_t>(nu)] = acc;
    }
    return out;
}

VCoefficients v_from_series(const Profile& profile, const TheoremParams& params, int J) {
    if (J < params.ell + 1)
        throw TruncationTooShort("v_from_series: need J >= ell+1");
    if (profile.nu_max() < J)
        throw ProfileTooShort("v_from_series: profile must cover index J");
    LocalSeries f_local;
    f_local.c.assign(profile.values.begin(), profile.values.begin() + J + 1);
    LocalSeries acc = f_local.mul(mu_local(), J);
    const LocalSeries mu_ell = mu_ell_local(params.ell);
    for (long long i = 0; i < params.k - 1; ++i) acc = acc.mul(mu_ell, J);

    VCoefficients out;
    out.params = params;
    out.source = "series";
    out.v = std::move(acc.c);
    return out;
}

ValueTable expand_v(const VCoefficients& vc, std::uint64_t x_max) {
    if (x_max < 1) throw CapacityError("expand_v: x_max must be >= 1");
    int e_needed = 0;
    for (std::uint64_t q = 1; q <= x_max / 2; q *= 2) ++e_needed;
    if (vc.order() < e_needed)
        throw TruncationTooShort("expand_v: truncation order " + std::to_string(vc.order()) +
                                 " < max exponent " + std::to_string(e_needed));
    if (x_max > (std::uint64_t(1) << 31))
        throw CapacityError("expand_v: x_max exceeds the dense-table budget");

    // v is supported on (ell+1)-full numbers, so almost every entry is zero;
    // walk factorizations only where needed via the spf table.
    const SpfTable spf(static_cast<std::uint32_t>(x_max));
    ValueTable table = ValueTable::zeros(x_max);
    table.v[1] = 1;
    for (std::uint64_t n = 2; n <= x_max; ++n) {
        std::uint32_t m = static_cast<std::uint32_t>(n);
        mpz_class val = 1;
        bool zero = false;
        while (m > 1) {
            const std::uint32_t p = spf(m);
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            const mpz_class& vp = vc.v[static_cast<std::size_t>(e)];
            if (vp == 0) {
                zero = true;
                break;
            }
            val *= vp;
        }
        if (!zero) table.v[static_cast<std::size_t>(n)] = val;
    }
    return table;
}

}  // namespace abelmom
