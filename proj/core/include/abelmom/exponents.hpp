#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace abelmom {

// A named reference remainder exponent, exact as a rational, with an
// optional log power.
struct ExponentEntry {
    std::string name;
    mpq_class value;
    int log_power = 0;
    // containment in the reference interval (1/(ell+1), 1/ell), when one
    // applies: "interior", "boundary", or "" when not applicable
    std::string containment;
};

// u_r = (2^{r+1} - 1) / (2^{r+2} + 1), r >= 2.
ExponentEntry u_r(int r);

// u_{k,ell} = (2k - 1) / (3 + (2k-1) ell), k, ell >= 2; containment is
// checked exactly against [1/(ell+1), 1/ell].
ExponentEntry u_kl(long long k, int ell);

// Everything relevant to moment order r: u_r (via k=2^r, ell=2), plus the
// sharper quadratic-moment entries when r = 2.
std::vector<ExponentEntry> reference_exponents_r(int r);

std::vector<ExponentEntry> reference_exponents_kl(long long k, int ell);

// The fixed named exponents: 45/127 (log power 5), 96/245, 1/4.
std::vector<ExponentEntry> known_exponents();

}  // namespace abelmom
