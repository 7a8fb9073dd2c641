#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "abelmom/divisor.hpp"
#include "abelmom/euler_product.hpp"
#include "abelmom/exponents.hpp"
#include "abelmom/sieve.hpp"

namespace abelmom {

// Main-term model C*x + x^{1/ell} * poly(log x); poly[i] multiplies log^i x.
// C always comes from the constants machinery, never from the fit.
struct MainTermModel {
    double C = 0;
    int ell = 2;
    std::vector<double> poly;
    std::string provenance;  // "fitted" or "analytic"

    double evaluate(double x) const;
};

// OLS slope of log|R| against log x, with points |R| < 1 dropped (R
// oscillates through zero; the floor avoids log blowups).
struct ExponentEstimate {
    double slope = 0;
    double std_error = 0;
    double lo = 0, hi = 0;  // slope -/+ 2 std errors
    int n_points = 0;
    bool valid = false;
};

ExponentEstimate estimate_exponent(const std::vector<double>& x, const std::vector<double>& r,
                                   double floor_abs = 1.0);

struct FitReport {
    std::vector<std::uint64_t> train_x, held_x;
    std::vector<double> train_residuals, held_residuals;
    ExponentEstimate exponent;  // held-out only
    double cond_estimate = 0;
};

// Least squares of (S(x) - C x) / x^{1/ell} against {1, log x, ..., log^d x}
// on the training split (indices with (i + split_offset) % 3 != 2); residuals
// and the exponent estimate come from the held-out third.
std::pair<MainTermModel, FitReport> fit_main_term(const CheckpointSeries& series, double C,
                                                  int ell, int degree, int split_offset = 0);

struct ThreeTermRow {
    std::uint64_t x = 0;
    mpz_class S;
    double remainder = 0;  // S - A1 x - A2 x^{1/2} - A3 x^{1/3}
    double scaled = 0;     // |remainder| / x^{0.30}
};

struct ThreeTermReport {
    std::vector<ThreeTermRow> rows;
    double max_scaled = 0;
    // OLS trend of log(scaled) vs log(x) over the last decade [x_max/10, x_max]
    ExponentEstimate last_decade_trend;
};

ThreeTermReport three_term_abelian_report(const CheckpointSeries& series, const AConstants& a);

struct DeltaRow {
    std::uint64_t x = 0;
    mpz_class S;         // exact floor-sum value
    double delta = 0;    // S - model
    bool held_out = false;
};

struct DeltaReport {
    std::string signature;
    double leading = 0;            // zeta(ell)^{k-1}
    double leading_empirical = 0;  // S(x_max) / x_max
    MainTermModel model;
    std::vector<DeltaRow> rows;
    ExponentEstimate exponent;  // held-out regression of log|delta| vs log x
    std::vector<ExponentEntry> references;
    double cond_estimate = 0;
};

// Exact divisor sums at the checkpoints, the fitted secondary term, and the
// measured remainder exponent next to the reference entries.
DeltaReport delta_measure(const DivisorSignature& j, const std::vector<std::uint64_t>& checkpoints,
                          int split_offset = 0);

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t lo, std::uint64_t hi, int n);

// Exact-to-~1e-30 conversion (two-term expansion), safe far past 2^53.
long double ld_from_mpz(const mpz_class& z);

}  // namespace abelmom
