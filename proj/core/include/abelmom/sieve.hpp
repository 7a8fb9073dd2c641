#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "abelmom/profile.hpp"
#include "abelmom/value_table.hpp"

namespace abelmom {

// Exact summatory values S_f(x_i) at increasing checkpoints.
struct CheckpointSeries {
    std::string function_name;
    std::vector<std::uint64_t> x;
    std::vector<mpz_class> sums;
};

struct SummatoryOptions {
    std::uint64_t segment_len = std::uint64_t(1) << 22;
    int threads = 1;
};

// f(n) for all n <= x_max via factor sieving; agrees pointwise with
// eval_multiplicative.  Dense-table budget applies.
ValueTable sieve_values(const Profile& profile, std::uint64_t x_max);

// f(n) = prod g(nu_p) over p^nu_p || n.
mpz_class eval_multiplicative(const Profile& profile, std::uint64_t n);

// Exact S_f at each checkpoint.  Segments are processed independently
// (possibly in parallel) and merged in index order, so the result is
// bit-identical for any thread count.
CheckpointSeries summatory(const Profile& profile, std::vector<std::uint64_t> checkpoints,
                           const SummatoryOptions& opts = {});

}  // namespace abelmom
