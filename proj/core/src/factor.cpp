#include "abelmom/factor.hpp"

#include <cmath>

#include "abelmom/errors.hpp"

namespace abelmom {

std::uint64_t Factorization::reconstruct() const {
    std::uint64_t n = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) n *= p;
    return n;
}

Factorization factorize(std::uint64_t n) {
    Factorization f;
    if (n == 0) throw CapacityError("factorize: n must be >= 1");
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

SpfTable::SpfTable(std::uint32_t x_max) : x_max_(x_max) {
    if (x_max < 2) throw CapacityError("spf_sieve: x_max must be >= 2");
    if (static_cast<std::uint64_t>(x_max) >= kDenseTableLimit)
        throw CapacityError("spf_sieve: x_max exceeds the dense-table budget; use segments");
    spf_.assign(static_cast<std::size_t>(x_max) + 1, 0);
    for (std::uint32_t i = 2; i <= x_max; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= x_max; j += i)
                if (spf_[static_cast<std::size_t>(j)] == 0)
                    spf_[static_cast<std::size_t>(j)] = i;
        }
    }
}

Factorization SpfTable::factorize(std::uint32_t n) const {
    if (n < 1 || n > x_max_) throw CapacityError("SpfTable::factorize: n out of range");
    Factorization f;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

SpfTable spf_sieve(std::uint32_t x_max) { return SpfTable(x_max); }

std::vector<std::uint32_t> spf_sieve_segment(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || hi <= lo) throw CapacityError("spf_sieve_segment: need 2 <= lo < hi");
    if (hi > (std::uint64_t(1) << 32))
        throw CapacityError("spf_sieve_segment: entries must fit uint32");
    const std::size_t len = static_cast<std::size_t>(hi - lo);
    std::vector<std::uint32_t> spf(len, 0);
    const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi - 1)));
    for (std::uint32_t p : primes_up_to(root)) {
        std::uint64_t m = (lo + p - 1) / p * p;
        for (; m < hi; m += p) {
            auto& slot = spf[static_cast<std::size_t>(m - lo)];
            if (slot == 0) slot = p;
        }
    }
    // untouched entries are primes
    for (std::size_t i = 0; i < len; ++i)
        if (spf[i] == 0) spf[i] = static_cast<std::uint32_t>(lo + i);
    return spf;
}

}  // namespace abelmom
