#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "abelmom/local_series.hpp"
#include "abelmom/profile.hpp"
#include "abelmom/value_table.hpp"

namespace abelmom {

// Prime-power values of v = f * mu * mu_ell^{*(k-1)}.  Prime-independent,
// with v(p^0) = 1 and v(p^nu) = 0 for 1 <= nu <= ell.
struct VCoefficients {
    std::vector<mpz_class> v;  // v[0..J]
    TheoremParams params;
    std::string source;  // "formula" or "series"

    int order() const { return static_cast<int>(v.size()) - 1; }
};

// Alternating binomial sum route:
//   v(p^nu) = sum_{j=0}^{k-1} (-1)^j binom(k-1,j) (f(p^{nu-j ell}) - f(p^{nu-j ell-1}))
// for nu >= ell+1, with the conventions f(p^0)=1 and f(p^m)=0 for m<0.
VCoefficients v_from_formula(const Profile& profile, const TheoremParams& params, int J);

// Independent series route: coefficients of
//   (sum_nu g(nu) t^nu) * (1-t) * (1-t^ell)^{k-1}  mod t^{J+1}.
VCoefficients v_from_series(const Profile& profile, const TheoremParams& params, int J);

// v(n) for n <= x_max by multiplicative expansion over factorizations.
ValueTable expand_v(const VCoefficients& vc, std::uint64_t x_max);

}  // namespace abelmom
