#include "abelmom/zeta.hpp"

#include <cmath>
#include <gmpxx.h>
#include <vector>

#include "abelmom/errors.hpp"

namespace abelmom {

namespace {

// B_{2r} for r = 1..13.
constexpr double kBernoulli2r[] = {
    1.0 / 6,           -1.0 / 30,         1.0 / 42,          -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,     7.0 / 6,           -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,   854513.0 / 138,    -236364091.0 / 2730,
    8553103.0 / 6,
};

// zeta(s) - 1 = sum_{n=2}^{N-1} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//               + sum_r B_{2r}/(2r)! * s(s+1)...(s+2r-2) * N^{-s-2r+1}.
// Every term is O(2^{-s}) or smaller, so the relative error stays at a few
// ulp even for large s where zeta(s) itself rounds to 1.
double zeta_minus_one_impl(double s) {
    constexpr int N = 64;
    constexpr int K = 13;
    long double sum = 0.0L;
    for (int n = N - 1; n >= 2; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    const long double Ns = std::pow(static_cast<long double>(N), -static_cast<long double>(s));
    sum += Ns * N / (static_cast<long double>(s) - 1.0L);
    sum += Ns / 2.0L;
    long double poch = static_cast<long double>(s);  // s(s+1)...(s+2r-2)
    long double fact = 2.0L;                         // (2r)!
    long double npow = Ns / N;                       // N^{-s-2r+1}
    for (int r = 1; r <= K; ++r) {
        sum += static_cast<long double>(kBernoulli2r[r - 1]) / fact * poch * npow;
        poch *= (s + 2 * r - 1) * (s + 2 * r);
        fact *= (2 * r + 1) * (2 * r + 2);
        npow /= static_cast<long double>(N) * N;
    }
    return static_cast<double>(sum);
}

// Integer Chebyshev-type weights d_k for the accelerated alternating series
// ("An efficient algorithm for the Riemann zeta function", Borwein, alg. 2):
//   d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!).
// Accumulated as exact rationals; every d_k is an integer.
std::vector<mpz_class> borwein_weights(unsigned n) {
    std::vector<mpz_class> d(n + 1);
    mpq_class acc = 0;
    mpz_class num, den;
    for (unsigned i = 0; i <= n; ++i) {
        mpz_fac_ui(num.get_mpz_t(), n + i - 1);
        num *= n;
        num <<= 2 * i;
        mpz_fac_ui(den.get_mpz_t(), n - i);
        mpz_class f2i;
        mpz_fac_ui(f2i.get_mpz_t(), 2 * i);
        den *= f2i;
        mpq_class term(num, den);
        term.canonicalize();
        acc += term;
        d[i] = acc.get_num();
        if (acc.get_den() != 1)
            throw ToleranceUnreachable("borwein_weights: non-integer weight (internal error)");
    }
    return d;
}

}  // namespace

double zeta_minus_one(double s) {
    if (s <= 0) throw UnsupportedDomain("zeta: s must be > 0");
    if (s == 1) throw PoleAtOne("zeta has a pole at s=1");
    return zeta_minus_one_impl(s);
}

double zeta_euler_maclaurin(double s) { return 1.0 + zeta_minus_one(s); }

double zeta_borwein(double s) {
    if (s <= 0) throw UnsupportedDomain("zeta: s must be > 0");
    if (s == 1) throw PoleAtOne("zeta has a pole at s=1");
    constexpr unsigned n = 48;  // truncation error < 3 * (3+sqrt8)^{-48}
    static const std::vector<mpz_class> d = borwein_weights(n);
    const double dn = d[n].get_d();
    long double sum = 0.0L;
    for (unsigned k = 0; k < n; ++k) {
        const double ratio = mpz_class(d[k] - d[n]).get_d() / dn;  // in (-1, 0]
        const long double term =
            static_cast<long double>(ratio) *
            std::pow(static_cast<long double>(k + 1), -static_cast<long double>(s));
        sum += (k % 2 == 0) ? term : -term;
    }
    const long double denom = 1.0L - std::pow(2.0L, 1.0L - static_cast<long double>(s));
    return static_cast<double>(-sum / denom);
}

double ln_zeta_int(long j) {
    if (j < 2) throw UnsupportedDomain("ln_zeta_int: j must be >= 2");
    return std::log1p(zeta_minus_one(static_cast<double>(j)));
}

double zeta_real(double s, double tol) {
    if (s <= 0) throw UnsupportedDomain("zeta: s must be > 0");
    if (s == 1) throw PoleAtOne("zeta has a pole at s=1");
    if (tol < 1e-13)
        throw ToleranceUnreachable("zeta_real: double evaluation certifies ~1e-13 at best");
    return (s > 1) ? zeta_euler_maclaurin(s) : zeta_borwein(s);
}

}  // namespace abelmom
