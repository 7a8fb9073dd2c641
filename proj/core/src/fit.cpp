#include "abelmom/fit.hpp"

#include <algorithm>
#include <cmath>

#include "abelmom/errors.hpp"
#include "abelmom/zeta.hpp"

namespace abelmom {

long double ld_from_mpz(const mpz_class& z) {
    const double d1 = z.get_d();  // leading 53 bits
    mpz_class head;
    mpz_set_d(head.get_mpz_t(), d1);
    const double d2 = mpz_class(z - head).get_d();
    return static_cast<long double>(d1) + static_cast<long double>(d2);
}

double MainTermModel::evaluate(double x) const {
    const double lx = std::log(x);
    double p = 0;
    for (std::size_t i = poly.size(); i-- > 0;) p = p * lx + poly[i];
    return C * x + std::pow(x, 1.0 / ell) * p;
}

ExponentEstimate estimate_exponent(const std::vector<double>& x, const std::vector<double>& r,
                                   double floor_abs) {
    ExponentEstimate est;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(r[i]) < floor_abs) continue;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(std::abs(r[i])));
    }
    est.n_points = static_cast<int>(lx.size());
    if (est.n_points < 3) return est;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double n = static_cast<double>(lx.size());
    const double denom = n * sxx - sx * sx;
    if (denom <= 0) return est;
    est.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - est.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double e = ly[i] - (intercept + est.slope * lx[i]);
        ss += e * e;
    }
    if (lx.size() > 2) {
        const double sigma2 = ss / (n - 2);
        est.std_error = std::sqrt(sigma2 * n / denom);
    }
    est.lo = est.slope - 2 * est.std_error;
    est.hi = est.slope + 2 * est.std_error;
    est.valid = true;
    return est;
}

namespace {

// Weighted-free OLS on the centered log basis; returns coefficients in the
// raw {1, log x, ...} basis plus a condition estimate from the Cholesky
// diagonal.
std::vector<double> poly_fit_log(const std::vector<double>& lx, const std::vector<double>& y,
                                 int degree, double* cond_out) {
    const int m = degree + 1;
    const std::size_t n = lx.size();
    double mean = 0;
    for (double v : lx) mean += v;
    mean /= static_cast<double>(n);
    double halfwidth = 0;
    for (double v : lx) halfwidth = std::max(halfwidth, std::abs(v - mean));
    if (halfwidth == 0) halfwidth = 1;

    // normal equations in u = (log x - mean)/halfwidth
    std::vector<long double> ata(static_cast<std::size_t>(m) * m, 0.0L);
    std::vector<long double> atb(static_cast<std::size_t>(m), 0.0L);
    std::vector<long double> pow_u(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < n; ++i) {
        const long double u = (lx[i] - mean) / halfwidth;
        pow_u[0] = 1;
        for (int k = 1; k < m; ++k) pow_u[static_cast<std::size_t>(k)] = pow_u[static_cast<std::size_t>(k - 1)] * u;
        for (int a = 0; a < m; ++a) {
            atb[static_cast<std::size_t>(a)] += pow_u[static_cast<std::size_t>(a)] * y[i];
            for (int b = a; b < m; ++b)
                ata[static_cast<std::size_t>(a * m + b)] += pow_u[static_cast<std::size_t>(a)] * pow_u[static_cast<std::size_t>(b)];
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < a; ++b) ata[static_cast<std::size_t>(a * m + b)] = ata[static_cast<std::size_t>(b * m + a)];

    // Cholesky
    std::vector<long double> L(static_cast<std::size_t>(m) * m, 0.0L);
    long double diag_min = 0, diag_max = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b <= a; ++b) {
            long double s = ata[static_cast<std::size_t>(a * m + b)];
            for (int k = 0; k < b; ++k)
                s -= L[static_cast<std::size_t>(a * m + k)] * L[static_cast<std::size_t>(b * m + k)];
            if (a == b) {
                if (s <= 0)
                    throw IllConditionedFit("poly_fit_log: normal matrix not positive definite");
                L[static_cast<std::size_t>(a * m + a)] = std::sqrt(static_cast<double>(s));
                const long double dv = L[static_cast<std::size_t>(a * m + a)];
                diag_min = (a == 0) ? dv : std::min(diag_min, dv);
                diag_max = (a == 0) ? dv : std::max(diag_max, dv);
            } else {
                L[static_cast<std::size_t>(a * m + b)] = s / L[static_cast<std::size_t>(b * m + b)];
            }
        }
    }
    const double cond = static_cast<double>((diag_max / diag_min) * (diag_max / diag_min));
    if (cond_out) *cond_out = cond;
    if (cond > 1e14)
        throw IllConditionedFit("poly_fit_log: condition estimate " + std::to_string(cond) +
                                " exceeds 1e14");

    // solve L L^T c = atb
    std::vector<long double> tmp(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        long double s = atb[static_cast<std::size_t>(a)];
        for (int k = 0; k < a; ++k) s -= L[static_cast<std::size_t>(a * m + k)] * tmp[static_cast<std::size_t>(k)];
        tmp[static_cast<std::size_t>(a)] = s / L[static_cast<std::size_t>(a * m + a)];
    }
    std::vector<long double> cu(static_cast<std::size_t>(m));
    for (int a = m - 1; a >= 0; --a) {
        long double s = tmp[static_cast<std::size_t>(a)];
        for (int k = a + 1; k < m; ++k) s -= L[static_cast<std::size_t>(k * m + a)] * cu[static_cast<std::size_t>(k)];
        cu[static_cast<std::size_t>(a)] = s / L[static_cast<std::size_t>(a * m + a)];
    }

    // expand from u = (t - mean)/halfwidth back to powers of t = log x:
    // sum_a cu_a ((t-mean)/hw)^a  ->  coefficients of t^b
    std::vector<long double> coeff(static_cast<std::size_t>(m), 0.0L);
    for (int a = 0; a < m; ++a) {
        // ((t - mean)/hw)^a = hw^{-a} sum_b binom(a,b) t^b (-mean)^{a-b}
        long double binom = 1;
        for (int b = 0; b <= a; ++b) {
            const long double c = cu[static_cast<std::size_t>(a)] * binom *
                                  std::pow(static_cast<long double>(-mean), a - b) /
                                  std::pow(static_cast<long double>(halfwidth), a);
            coeff[static_cast<std::size_t>(b)] += c;
            binom = binom * (a - b) / (b + 1);
        }
    }
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) out[static_cast<std::size_t>(a)] = static_cast<double>(coeff[static_cast<std::size_t>(a)]);
    return out;
}

double residual_exact(const mpz_class& S, const MainTermModel& model, std::uint64_t x) {
    const long double sv = ld_from_mpz(S);
    const long double mv = static_cast<long double>(model.evaluate(static_cast<double>(x)));
    return static_cast<double>(sv - mv);
}

}  // namespace

std::pair<MainTermModel, FitReport> fit_main_term(const CheckpointSeries& series, double C,
                                                  int ell, int degree, int split_offset) {
    if (degree < 0) throw IllConditionedFit("fit_main_term: degree must be >= 0");
    if (ell < 1) throw IllConditionedFit("fit_main_term: ell must be >= 1");
    const std::size_t n = series.x.size();
    FitReport report;
    std::vector<double> lx_train, y_train;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t x = series.x[i];
        const bool held = ((i + static_cast<std::size_t>(split_offset)) % 3) == 2;
        if (held) {
            report.held_x.push_back(x);
        } else {
            report.train_x.push_back(x);
            const long double sv = ld_from_mpz(series.sums[i]);
            const long double main = static_cast<long double>(C) * static_cast<long double>(x);
            const double y = static_cast<double>(
                (sv - main) / std::pow(static_cast<long double>(x), 1.0L / ell));
            lx_train.push_back(std::log(static_cast<double>(x)));
            y_train.push_back(y);
        }
    }
    if (report.train_x.size() < static_cast<std::size_t>(degree) + 3)
        throw IllConditionedFit("fit_main_term: need at least degree+3 training checkpoints");

    MainTermModel model;
    model.C = C;
    model.ell = ell;
    model.provenance = "fitted";
    model.poly = poly_fit_log(lx_train, y_train, degree, &report.cond_estimate);

    // residuals, exact sums minus model
    std::vector<double> held_xd;
    for (std::size_t i = 0; i < n; ++i) {
        const bool held = ((i + static_cast<std::size_t>(split_offset)) % 3) == 2;
        const double r = residual_exact(series.sums[i], model, series.x[i]);
        if (held) {
            report.held_residuals.push_back(r);
            held_xd.push_back(static_cast<double>(series.x[i]));
        } else {
            report.train_residuals.push_back(r);
        }
    }
    report.exponent = estimate_exponent(held_xd, report.held_residuals);
    return {model, report};
}

ThreeTermReport three_term_abelian_report(const CheckpointSeries& series, const AConstants& a) {
    ThreeTermReport rep;
    std::vector<double> xs, scaled_log;
    for (std::size_t i = 0; i < series.x.size(); ++i) {
        ThreeTermRow row;
        row.x = series.x[i];
        row.S = series.sums[i];
        const long double xd = static_cast<long double>(row.x);
        const long double main = static_cast<long double>(a.a1.value) * xd +
                                 static_cast<long double>(a.a2.value) * std::sqrt(xd) +
                                 static_cast<long double>(a.a3.value) * std::pow(xd, 1.0L / 3);
        row.remainder = static_cast<double>(ld_from_mpz(row.S) - main);
        row.scaled = std::abs(row.remainder) / std::pow(static_cast<double>(row.x), 0.30);
        rep.max_scaled = std::max(rep.max_scaled, row.scaled);
        rep.rows.push_back(row);
    }
    // trend over the last decade
    const std::uint64_t x_max = series.x.back();
    std::vector<double> tx, tr;
    for (const auto& row : rep.rows) {
        if (row.x * 10 >= x_max) {
            tx.push_back(static_cast<double>(row.x));
            tr.push_back(row.scaled);
        }
    }
    rep.last_decade_trend = estimate_exponent(tx, tr, 0.0);
    return rep;
}

DeltaReport delta_measure(const DivisorSignature& j, const std::vector<std::uint64_t>& checkpoints,
                          int split_offset) {
    j.validate();
    if (!j.is_theorem_shape())
        throw CapacityError("delta_measure: signature must have shape (1, ell, ..., ell)");
    DeltaReport rep;
    rep.signature = j.label();
    const int t = static_cast<int>(j.exponents.size());

    CheckpointSeries series;
    series.function_name = "d" + j.label();
    series.x = checkpoints;
    for (const std::uint64_t x : checkpoints) series.sums.push_back(exact_divisor_sum(j, x));

    if (t == 1) {
        // H(x) = x exactly; delta = floor(x) - x = 0 at integer checkpoints
        rep.leading = 1.0;
        rep.model.C = 1.0;
        rep.model.ell = 1;
        rep.model.provenance = "analytic";
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            DeltaRow row;
            row.x = checkpoints[i];
            row.S = series.sums[i];
            row.delta = static_cast<double>(ld_from_mpz(row.S)) - static_cast<double>(row.x);
            rep.rows.push_back(row);
        }
        rep.leading_empirical = static_cast<double>(ld_from_mpz(series.sums.back())) /
                                static_cast<double>(checkpoints.back());
        return rep;
    }

    const int ell = j.exponents[1];
    const long long k = t;
    rep.leading = std::pow(zeta_real(static_cast<double>(ell)), static_cast<double>(k - 1));
    rep.references = reference_exponents_kl(k, ell);
    if (ell == 2 && k == 4)
        for (auto& e : known_exponents())
            if (e.name == "delta2_bound") rep.references.push_back(e);

    auto [model, fit] = fit_main_term(series, rep.leading, ell, static_cast<int>(k) - 2, split_offset);
    rep.model = model;
    rep.cond_estimate = fit.cond_estimate;
    rep.exponent = fit.exponent;
    std::size_t train_i = 0, held_i = 0;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        DeltaRow row;
        row.x = checkpoints[i];
        row.S = series.sums[i];
        row.held_out = ((i + static_cast<std::size_t>(split_offset)) % 3) == 2;
        row.delta = row.held_out ? fit.held_residuals[held_i++] : fit.train_residuals[train_i++];
        rep.rows.push_back(row);
    }
    rep.leading_empirical = static_cast<double>(ld_from_mpz(series.sums.back())) /
                            static_cast<double>(checkpoints.back());
    return rep;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t lo, std::uint64_t hi, int n) {
    if (lo < 1 || hi < lo || n < 1) throw CapacityError("geometric_checkpoints: bad range");
    std::vector<std::uint64_t> out;
    if (n == 1) return {hi};
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(hi));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        auto x = static_cast<std::uint64_t>(std::llround(std::exp(llo + t * (lhi - llo))));
        x = std::max(lo, std::min(hi, x));
        if (out.empty() || x > out.back()) out.push_back(x);
    }
    if (out.back() != hi) out.push_back(hi);
    return out;
}

}  // namespace abelmom
