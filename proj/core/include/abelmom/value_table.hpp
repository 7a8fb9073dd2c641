#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace abelmom {

// Dense table of exact values f(1..x_max); index 0 is unused and kept 0.
struct ValueTable {
    std::uint64_t x_max = 0;
    std::vector<mpz_class> v;

    static ValueTable zeros(std::uint64_t x_max);
    static ValueTable delta_one(std::uint64_t x_max);  // 1 at n=1, else 0
    static ValueTable ones(std::uint64_t x_max);

    const mpz_class& at(std::uint64_t n) const { return v[static_cast<std::size_t>(n)]; }
    mpz_class& at(std::uint64_t n) { return v[static_cast<std::size_t>(n)]; }

    mpz_class prefix_sum(std::uint64_t x) const;
};

}  // namespace abelmom
