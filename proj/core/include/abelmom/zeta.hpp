#pragma once

namespace abelmom {

// Riemann zeta on the positive real axis, s != 1.
//
// Two independent evaluation schemes are exposed so they can be checked
// against each other:
//   - zeta_borwein: alternating eta series accelerated with Chebyshev-type
//     integer weights (exact via GMP); valid for all s > 0, s != 1.
//   - zeta_euler_maclaurin: truncated direct sum plus Euler-Maclaurin tail
//     corrections; valid for all s > 0, s != 1.
double zeta_borwein(double s);
double zeta_euler_maclaurin(double s);

// zeta(s) - 1 with full relative accuracy even when zeta(s) is close to 1
// (the n=1 term never enters the summation).
double zeta_minus_one(double s);

// log zeta(j) for integer j >= 2, relative error a few ulp.  Safe to
// multiply by very large factorization exponents.
double ln_zeta_int(long j);

// Dispatching evaluator: Euler-Maclaurin for s > 1, Borwein for 0 < s < 1.
// Throws PoleAtOne at s = 1, UnsupportedDomain for s <= 0, and
// ToleranceUnreachable when tol is below what double evaluation certifies.
double zeta_real(double s, double tol = 1e-12);

}  // namespace abelmom
