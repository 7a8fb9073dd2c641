#include "abelmom/partition.hpp"

#include <cmath>

#include "abelmom/errors.hpp"

namespace abelmom {

std::vector<mpz_class> partition_table(std::int64_t n_max) {
    if (n_max < 0) throw CapacityError("partition_table: n_max must be >= 0");
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const bool plus = (k & 1) != 0;
            if (plus)
                acc += p[n - g1];
            else
                acc -= p[n - g1];
            if (g2 <= n) {
                if (plus)
                    acc += p[n - g2];
                else
                    acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

double log_mpz(const mpz_class& n) {
    signed long exp2;
    const double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

bool partition_bound_check(std::int64_t n_max) {
    if (n_max < 1) throw CapacityError("partition_bound_check: n_max must be >= 1");
    const auto p = partition_table(n_max);
    for (std::int64_t nu = 1; nu <= n_max; ++nu) {
        const double lhs = log_mpz(p[nu]);
        const double rhs = M_PI * std::sqrt(2.0 * static_cast<double>(nu) / 3.0);
        if (!(lhs < rhs - 1e-9 * rhs)) return false;
    }
    return true;
}

}  // namespace abelmom
