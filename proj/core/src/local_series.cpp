#include "abelmom/local_series.hpp"

#include <algorithm>

#include "abelmom/errors.hpp"

namespace abelmom {

LocalSeries LocalSeries::one(int order) {
    LocalSeries s;
    s.c.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
    s.c[0] = 1;
    return s;
}

LocalSeries LocalSeries::mul(const LocalSeries& other, int out_order) const {
    LocalSeries out;
    out.c.assign(static_cast<std::size_t>(out_order) + 1, mpz_class(0));
    const int na = order();
    const int nb = other.order();
    for (int i = 0; i <= na && i <= out_order; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        const int jmax = std::min(nb, out_order - i);
        for (int j = 0; j <= jmax; ++j) {
            if (other.c[static_cast<std::size_t>(j)] == 0) continue;
            out.c[static_cast<std::size_t>(i + j)] +=
                c[static_cast<std::size_t>(i)] * other.c[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

LocalSeries LocalSeries::inverse() const {
    if (!is_unit()) throw NonUnitSeries("LocalSeries::inverse: c0 must be 1");
    const int n = order();
    LocalSeries out = one(n);
    // b_m = -sum_{j=1..m} c_j b_{m-j}
    for (int m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += c[static_cast<std::size_t>(j)] * out.c[static_cast<std::size_t>(m - j)];
        out.c[static_cast<std::size_t>(m)] = -acc;
    }
    return out;
}

LocalSeries LocalSeries::one_minus_tj_pow(int j, const mpz_class& e, int order) {
    if (j < 1) throw NonUnitSeries("one_minus_tj_pow: j must be >= 1");
    LocalSeries out = one(order);
    // (1-t^j)^e = sum_i binom(e,i) (-1)^i t^{ji}; binom(e,i) exact for any
    // integer e via the falling-factorial quotient.
    mpz_class binom = 1;
    for (int i = 1; i * j <= order; ++i) {
        binom *= e - (i - 1);
        binom /= i;
        out.c[static_cast<std::size_t>(i * j)] = (i % 2 == 0) ? binom : -binom;
    }
    return out;
}

LocalSeries mu_local() {
    LocalSeries s;
    s.c = {mpz_class(1), mpz_class(-1)};
    return s;
}

LocalSeries mu_ell_local(int ell) {
    if (ell < 2) throw NonUnitSeries("mu_ell_local: ell must be >= 2");
    LocalSeries s;
    s.c.assign(static_cast<std::size_t>(ell) + 1, mpz_class(0));
    s.c[0] = 1;
    s.c[static_cast<std::size_t>(ell)] = -1;
    return s;
}

}  // namespace abelmom
