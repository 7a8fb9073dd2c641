#include "abelmom/divisor.hpp"

#include <algorithm>

#include "abelmom/errors.hpp"
#include "abelmom/sieve.hpp"
#include "abelmom/vcoeff.hpp"

namespace abelmom {

void DivisorSignature::validate() const {
    if (exponents.empty()) throw CapacityError("DivisorSignature: t must be >= 1");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1) throw CapacityError("DivisorSignature: components must be >= 1");
        if (i > 0 && exponents[i] < exponents[i - 1])
            throw CapacityError("DivisorSignature: components must be sorted ascending");
    }
}

std::string DivisorSignature::label() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    return s + ")";
}

DivisorSignature DivisorSignature::theorem_shape(int ell, long long k) {
    if (ell < 2 || k < 2) throw CapacityError("theorem_shape: need ell, k >= 2");
    DivisorSignature j;
    j.exponents.push_back(1);
    for (long long i = 0; i < k - 1; ++i) j.exponents.push_back(ell);
    j.validate();
    return j;
}

bool DivisorSignature::is_theorem_shape() const {
    if (exponents.empty() || exponents[0] != 1) return false;
    for (std::size_t i = 2; i < exponents.size(); ++i)
        if (exponents[i] != exponents[1]) return false;
    return true;
}

ValueTable divisor_signature_values(const DivisorSignature& j, std::uint64_t x_max) {
    j.validate();
    if (x_max < 1) throw CapacityError("divisor_signature_values: x_max must be >= 1");
    if (x_max > (std::uint64_t(1) << 24))
        throw CapacityError("divisor_signature_values: x_max exceeds the dense-table budget");
    ValueTable acc = ValueTable::delta_one(x_max);
    // one additive pass per component: acc <- acc * e_m with e_m the
    // indicator of m-th powers
    for (const int m : j.exponents) {
        ValueTable next = ValueTable::zeros(x_max);
        for (std::uint64_t d = 1;; ++d) {
            // q = d^m, overflow-safe
            std::uint64_t q = 1;
            bool over = false;
            for (int i = 0; i < m; ++i) {
                if (q > x_max / d) {
                    over = true;
                    break;
                }
                q *= d;
            }
            if (over || q > x_max) break;
            for (std::uint64_t s = 1; s * q <= x_max; ++s) {
                const mpz_class& av = acc.v[static_cast<std::size_t>(s)];
                if (av != 0) next.v[static_cast<std::size_t>(s * q)] += av;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

ValueTable dirichlet_convolve(const ValueTable& a, const ValueTable& b) {
    if (a.x_max != b.x_max) throw CapacityError("dirichlet_convolve: tables must share x_max");
    const std::uint64_t x = a.x_max;
    auto count_nonzero = [x](const ValueTable& t) {
        std::uint64_t c = 0;
        for (std::uint64_t n = 1; n <= x; ++n)
            if (t.v[static_cast<std::size_t>(n)] != 0) ++c;
        return c;
    };
    // iterate the sparser table on the outside
    const bool a_outer = count_nonzero(a) <= count_nonzero(b);
    const ValueTable& outer = a_outer ? a : b;
    const ValueTable& inner = a_outer ? b : a;

    ValueTable out = ValueTable::zeros(x);
    for (std::uint64_t n = 1; n <= x; ++n) {
        const mpz_class& on = outer.v[static_cast<std::size_t>(n)];
        if (on == 0) continue;
        for (std::uint64_t m = 1; n * m <= x; ++m) {
            const mpz_class& im = inner.v[static_cast<std::size_t>(m)];
            if (im != 0) out.v[static_cast<std::size_t>(n * m)] += on * im;
        }
    }
    return out;
}

IdentityReport convolution_identity_check(const Profile& profile, const TheoremParams& params,
                                          std::uint64_t x_max) {
    IdentityReport report;
    report.x_max = x_max;
    report.params = params;

    const ValueTable f = sieve_values(profile, x_max);
    int e_needed = 0;
    for (std::uint64_t q = 1; q <= x_max / 2; q *= 2) ++e_needed;
    const int J = std::max(e_needed, params.ell + 1);
    const VCoefficients vc = v_from_formula(profile, params, J);
    const ValueTable v = expand_v(vc, x_max);
    const DivisorSignature j = DivisorSignature::theorem_shape(params.ell, params.k);
    const ValueTable d = divisor_signature_values(j, x_max);
    const ValueTable conv = dirichlet_convolve(d, v);

    for (std::uint64_t n = 1; n <= x_max; ++n) {
        if (conv.v[static_cast<std::size_t>(n)] != f.v[static_cast<std::size_t>(n)]) {
            report.ok = false;
            report.first_counterexample = n;
            report.lhs = f.v[static_cast<std::size_t>(n)];
            report.rhs = conv.v[static_cast<std::size_t>(n)];
            return report;
        }
    }
    report.ok = true;
    return report;
}

namespace {

bool pow_leq(std::uint64_t base, int exp, std::uint64_t limit) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > limit) return false;
    }
    return true;
}

void floor_sum_rec(int remaining, std::uint64_t prod, int ell, std::uint64_t x,
                   unsigned __int128& total) {
    if (remaining == 0) {
        std::uint64_t q = 1;
        for (int i = 0; i < ell; ++i) q *= prod;  // prod^ell <= x by construction
        total += x / q;
        return;
    }
    for (std::uint64_t d = 1;; ++d) {
        if (prod > x / d) break;  // prod*d > x already, so (prod*d)^ell > x
        if (!pow_leq(prod * d, ell, x)) break;
        floor_sum_rec(remaining - 1, prod * d, ell, x, total);
    }
}

}  // namespace

mpz_class exact_divisor_sum(const DivisorSignature& j, std::uint64_t x) {
    j.validate();
    if (x < 1) throw CapacityError("exact_divisor_sum: x must be >= 1");
    if (!j.is_theorem_shape())
        throw CapacityError("exact_divisor_sum: signature must have shape (1, ell, ..., ell)");
    const int t = static_cast<int>(j.exponents.size());
    if (t == 1) return mpz_class(static_cast<unsigned long>(x));
    const int ell = j.exponents[1];

    // sum over ordered tuples (d_2..d_t) of floor(x / (d_2...d_t)^ell)
    unsigned __int128 total = 0;
    floor_sum_rec(t - 1, 1, ell, x, total);

    const std::uint64_t hi = static_cast<std::uint64_t>(total >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(total);
    mpz_class out(hi);
    out <<= 64;
    out += mpz_class(lo);
    return out;
}

}  // namespace abelmom
