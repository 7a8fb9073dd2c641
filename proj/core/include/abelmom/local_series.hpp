#pragma once

#include <gmpxx.h>
#include <vector>

namespace abelmom {

// Truncated power series in t = p^{-s} with exact integer coefficients.
// All arithmetic is exact and truncates at the stated order.
struct LocalSeries {
    std::vector<mpz_class> c;  // c[0..order]

    int order() const { return static_cast<int>(c.size()) - 1; }
    bool is_unit() const { return !c.empty() && c[0] == 1; }

    static LocalSeries one(int order);

    // (this * other) mod t^{out_order+1}
    LocalSeries mul(const LocalSeries& other, int out_order) const;

    // Multiplicative inverse mod t^{order+1}; requires c[0] == 1
    // (which keeps all coefficients integral).
    LocalSeries inverse() const;

    // (1 - t^j)^e mod t^{order+1}, e any integer (binomial expansion).
    static LocalSeries one_minus_tj_pow(int j, const mpz_class& e, int order);
};

// Local Euler factor of the Moebius function: 1 - t.
LocalSeries mu_local();

// Local Euler factor of mu_ell (mu at ell-th powers, 0 elsewhere): 1 - t^ell.
LocalSeries mu_ell_local(int ell);

}  // namespace abelmom
