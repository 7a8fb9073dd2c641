#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "abelmom/factor.hpp"
#include "abelmom/profile.hpp"

namespace oracles {

// Partition numbers by the coin-count dynamic program (one pass per part
// size), nothing shared with the pentagonal recurrence.
inline std::vector<mpz_class> partition_dp(int n_max) {
    std::vector<mpz_class> dp(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    dp[0] = 1;
    for (int part = 1; part <= n_max; ++part)
        for (int s = part; s <= n_max; ++s)
            dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - part)];
    return dp;
}

// d(j;n) by direct enumeration of tuples.
inline long divisor_signature_brute(const std::vector<int>& j, std::uint64_t n,
                                    std::size_t idx = 0) {
    if (idx == j.size()) return n == 1 ? 1 : 0;
    long count = 0;
    for (std::uint64_t d = 1;; ++d) {
        unsigned __int128 q = 1;
        for (int i = 0; i < j[idx]; ++i) q *= d;
        if (q > n) break;
        if (n % static_cast<std::uint64_t>(q) == 0)
            count += divisor_signature_brute(j, n / static_cast<std::uint64_t>(q), idx + 1);
    }
    return count;
}

// S_f(x) through the hyperbola identity S_f(x) = sum_m w(m) floor(x/m) with
// w = f * mu.  Because f(p) = 1 for the registry profiles, w is supported on
// powerful numbers, so the sum has O(sqrt x) terms.  Completely independent
// of the segmented sieve.
inline mpz_class summatory_powerful(const abelmom::Profile& profile, std::uint64_t x) {
    const int numax = profile.nu_max();
    std::vector<mpz_class> w(static_cast<std::size_t>(numax) + 1);
    w[0] = 1;
    for (int nu = 1; nu <= numax; ++nu)
        w[static_cast<std::size_t>(nu)] = profile.values[static_cast<std::size_t>(nu)] -
                                          profile.values[static_cast<std::size_t>(nu - 1)];
    if (numax >= 1 && w[1] != 0) throw std::runtime_error("oracle needs f(p) = 1");
    std::uint32_t root = 2;
    while (static_cast<std::uint64_t>(root) * root <= x) ++root;
    const auto primes = abelmom::primes_up_to(root);

    mpz_class total = 0;
    struct Node {
        std::size_t prime_idx;
        std::uint64_t m;
        mpz_class wm;
    };
    std::vector<Node> stack;
    stack.push_back({0, 1, mpz_class(1)});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        total += node.wm * mpz_class(static_cast<unsigned long>(x / node.m));
        for (std::size_t i = node.prime_idx; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (p * p > x / node.m) break;
            std::uint64_t pe = p * p;
            int e = 2;
            while (pe <= x / node.m) {
                if (e > numax) break;
                if (w[static_cast<std::size_t>(e)] != 0)
                    stack.push_back({i + 1, node.m * pe, node.wm * w[static_cast<std::size_t>(e)]});
                if (pe > x / p) break;
                pe *= p;
                ++e;
            }
        }
    }
    return total;
}

}  // namespace oracles
