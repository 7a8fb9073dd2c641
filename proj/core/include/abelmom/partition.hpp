#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace abelmom {

// Exact partition numbers P(0..n_max) by Euler's pentagonal-number recurrence:
//   P(n) = sum_{k>=1} (-1)^{k-1} [ P(n - k(3k-1)/2) + P(n - k(3k+1)/2) ].
std::vector<mpz_class> partition_table(std::int64_t n_max);

// True iff P(nu) < e^{pi sqrt(2 nu / 3)} for all 1 <= nu <= n_max.
// The right side is evaluated in floating point; the comparison is done in
// log space and demands a relative safety margin of 1e-9, so a pass is a
// genuine (if not formally verified) strict inequality.
bool partition_bound_check(std::int64_t n_max);

// log of a positive big integer, exact to double rounding.
double log_mpz(const mpz_class& n);

}  // namespace abelmom
