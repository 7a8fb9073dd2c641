#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace abelmom {

// (prime, exponent) pairs with primes strictly increasing.
struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t reconstruct() const;
};

// Trial division; fine for isolated n up to ~10^14.
Factorization factorize(std::uint64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Smallest-prime-factor table for 2..x_max.  spf(n) == n iff n is prime.
class SpfTable {
  public:
    explicit SpfTable(std::uint32_t x_max);

    std::uint32_t x_max() const { return x_max_; }
    std::uint32_t operator()(std::uint32_t n) const { return spf_[n]; }

    Factorization factorize(std::uint32_t n) const;

  private:
    std::uint32_t x_max_;
    std::vector<std::uint32_t> spf_;
};

// Budget guard shared by the dense-table builders.
inline constexpr std::uint64_t kDenseTableLimit = std::uint64_t(1) << 31;

SpfTable spf_sieve(std::uint32_t x_max);

// Smallest prime factors for the window [lo, hi); identical entries to the
// dense table.
std::vector<std::uint32_t> spf_sieve_segment(std::uint64_t lo, std::uint64_t hi);

}  // namespace abelmom
