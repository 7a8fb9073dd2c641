#include "abelmom/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "abelmom/errors.hpp"
#include "abelmom/factor.hpp"

namespace abelmom {

ValueTable ValueTable::zeros(std::uint64_t x_max) {
    ValueTable t;
    t.x_max = x_max;
    t.v.assign(static_cast<std::size_t>(x_max) + 1, mpz_class(0));
    return t;
}

ValueTable ValueTable::delta_one(std::uint64_t x_max) {
    ValueTable t = zeros(x_max);
    if (x_max >= 1) t.v[1] = 1;
    return t;
}

ValueTable ValueTable::ones(std::uint64_t x_max) {
    ValueTable t = zeros(x_max);
    for (std::uint64_t n = 1; n <= x_max; ++n) t.v[static_cast<std::size_t>(n)] = 1;
    return t;
}

mpz_class ValueTable::prefix_sum(std::uint64_t x) const {
    mpz_class s = 0;
    for (std::uint64_t n = 1; n <= x && n <= x_max; ++n) s += v[static_cast<std::size_t>(n)];
    return s;
}

mpz_class eval_multiplicative(const Profile& profile, std::uint64_t n) {
    profile.validate();
    if (n == 0) throw CapacityError("eval_multiplicative: n must be >= 1");
    mpz_class out = 1;
    for (const auto& [p, e] : factorize(n).factors) out *= profile.at(e);
    return out;
}

namespace {

constexpr std::uint64_t kValueTableLimit = std::uint64_t(1) << 24;

mpz_class mpz_from_u128(unsigned __int128 x) {
    const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(x);
    mpz_class out(hi);
    out <<= 64;
    out += mpz_class(lo);
    return out;
}

int max_exponent_needed(std::uint64_t x_max) {
    int e = 0;
    for (std::uint64_t q = 1; q <= x_max / 2; q *= 2) ++e;
    return e;
}

// Per-worker scratch for one segment [lo, hi).
struct SegmentScratch {
    std::vector<std::uint64_t> val;
    std::vector<std::uint64_t> rem;
    std::vector<mpz_class> val_z;  // only used on the big-value path
};

struct ProfileU64 {
    std::vector<std::uint64_t> g;  // empty when some g(nu) does not fit u64
    bool usable = false;
};

ProfileU64 profile_to_u64(const Profile& profile, int e_needed) {
    ProfileU64 out;
    out.usable = true;
    out.g.reserve(static_cast<std::size_t>(e_needed) + 1);
    for (int e = 0; e <= e_needed; ++e) {
        const mpz_class& v = profile.at(e);
        if (v < 0 || !v.fits_ulong_p()) {
            out.usable = false;
            out.g.clear();
            return out;
        }
        out.g.push_back(static_cast<std::uint64_t>(v.get_ui()));
    }
    return out;
}

// Evaluate f on [lo, hi) into scratch.val.  Returns false when a product
// overflows u64; the caller reruns the segment with exact arithmetic.
bool eval_segment_u64(const std::vector<std::uint64_t>& g, const std::vector<std::uint32_t>& primes,
                      std::uint64_t lo, std::uint64_t hi, SegmentScratch& s) {
    const std::size_t len = static_cast<std::size_t>(hi - lo);
    s.val.assign(len, 1);
    s.rem.resize(len);
    for (std::size_t i = 0; i < len; ++i) s.rem[i] = lo + i;
    for (const std::uint32_t p : primes) {
        const std::uint64_t p64 = p;
        if (p64 * p64 >= hi) break;
        for (std::uint64_t m = (lo + p64 - 1) / p64 * p64; m < hi; m += p64) {
            const std::size_t i = static_cast<std::size_t>(m - lo);
            std::uint64_t r = s.rem[i];
            int e = 0;
            while (r % p64 == 0) {
                r /= p64;
                ++e;
            }
            s.rem[i] = r;
            if (static_cast<std::size_t>(e) >= g.size())
                throw ProfileTooShort("sieve: exponent exceeds profile length");
            if (__builtin_mul_overflow(s.val[i], g[e], &s.val[i])) return false;
        }
    }
    const std::uint64_t g1 = g.size() > 1 ? g[1] : 1;
    if (g1 != 1) {
        for (std::size_t i = 0; i < len; ++i)
            if (s.rem[i] > 1 && __builtin_mul_overflow(s.val[i], g1, &s.val[i])) return false;
    }
    return true;
}

// Exact fallback; same traversal with mpz values.
void eval_segment_mpz(const Profile& profile, const std::vector<std::uint32_t>& primes,
                      std::uint64_t lo, std::uint64_t hi, SegmentScratch& s) {
    const std::size_t len = static_cast<std::size_t>(hi - lo);
    s.val_z.assign(len, mpz_class(1));
    s.rem.resize(len);
    for (std::size_t i = 0; i < len; ++i) s.rem[i] = lo + i;
    for (const std::uint32_t p : primes) {
        const std::uint64_t p64 = p;
        if (p64 * p64 >= hi) break;
        for (std::uint64_t m = (lo + p64 - 1) / p64 * p64; m < hi; m += p64) {
            const std::size_t i = static_cast<std::size_t>(m - lo);
            std::uint64_t r = s.rem[i];
            int e = 0;
            while (r % p64 == 0) {
                r /= p64;
                ++e;
            }
            s.rem[i] = r;
            s.val_z[i] *= profile.at(e);
        }
    }
    for (std::size_t i = 0; i < len; ++i)
        if (s.rem[i] > 1) s.val_z[i] *= profile.at(1);
}

struct SegmentResult {
    mpz_class total;
    std::vector<mpz_class> checkpoint_prefix;  // aligned with checkpoint hits in this segment
};

}  // namespace

ValueTable sieve_values(const Profile& profile, std::uint64_t x_max) {
    profile.validate();
    if (x_max < 1) throw CapacityError("sieve_values: x_max must be >= 1");
    if (x_max > kValueTableLimit)
        throw CapacityError("sieve_values: x_max exceeds the dense-table budget; use summatory");
    const int e_needed = max_exponent_needed(x_max);
    if (profile.nu_max() < e_needed)
        throw ProfileTooShort("sieve_values: profile shorter than max exponent " +
                              std::to_string(e_needed));
    const auto primes = primes_up_to(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(x_max))) + 2);
    const ProfileU64 g64 = profile_to_u64(profile, e_needed);

    ValueTable table = ValueTable::zeros(x_max);
    SegmentScratch scratch;
    const std::uint64_t seg = std::uint64_t(1) << 20;
    for (std::uint64_t lo = 1; lo <= x_max; lo += seg) {
        const std::uint64_t hi = std::min(x_max + 1, lo + seg);
        if (g64.usable && eval_segment_u64(g64.g, primes, lo, hi, scratch)) {
            for (std::uint64_t n = lo; n < hi; ++n)
                table.v[static_cast<std::size_t>(n)] = scratch.val[static_cast<std::size_t>(n - lo)];
        } else {
            eval_segment_mpz(profile, primes, lo, hi, scratch);
            for (std::uint64_t n = lo; n < hi; ++n)
                table.v[static_cast<std::size_t>(n)] = scratch.val_z[static_cast<std::size_t>(n - lo)];
        }
    }
    return table;
}

CheckpointSeries summatory(const Profile& profile, std::vector<std::uint64_t> checkpoints,
                           const SummatoryOptions& opts) {
    profile.validate();
    if (checkpoints.empty()) throw CapacityError("summatory: checkpoints must be nonempty");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1) throw CapacityError("summatory: checkpoints must be >= 1");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw CapacityError("summatory: checkpoints must be strictly increasing");
    }
    const std::uint64_t x_max = checkpoints.back();
    const std::uint64_t seg_len = std::max<std::uint64_t>(opts.segment_len, 1024);
    const int e_needed = max_exponent_needed(x_max);
    if (profile.nu_max() < e_needed)
        throw ProfileTooShort("summatory: profile shorter than max exponent " +
                              std::to_string(e_needed));
    const auto primes = primes_up_to(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(x_max))) + 2);
    const ProfileU64 g64 = profile_to_u64(profile, e_needed);

    const std::size_t n_segments = static_cast<std::size_t>((x_max + seg_len - 1) / seg_len);
    std::vector<SegmentResult> results(n_segments);

    auto run_segment = [&](std::size_t idx, SegmentScratch& scratch) {
        const std::uint64_t lo = 1 + static_cast<std::uint64_t>(idx) * seg_len;
        const std::uint64_t hi = std::min(x_max + 1, lo + seg_len);
        SegmentResult& res = results[idx];
        const auto cp_lo = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo);
        const auto cp_hi = std::lower_bound(checkpoints.begin(), checkpoints.end(), hi);
        if (g64.usable && eval_segment_u64(g64.g, primes, lo, hi, scratch)) {
            unsigned __int128 acc = 0;
            auto cp = cp_lo;
            for (std::uint64_t n = lo; n < hi; ++n) {
                acc += scratch.val[static_cast<std::size_t>(n - lo)];
                if (cp != cp_hi && n == *cp) {
                    res.checkpoint_prefix.push_back(mpz_from_u128(acc));
                    ++cp;
                }
            }
            res.total = mpz_from_u128(acc);
        } else {
            eval_segment_mpz(profile, primes, lo, hi, scratch);
            mpz_class acc = 0;
            auto cp = cp_lo;
            for (std::uint64_t n = lo; n < hi; ++n) {
                acc += scratch.val_z[static_cast<std::size_t>(n - lo)];
                if (cp != cp_hi && n == *cp) {
                    res.checkpoint_prefix.push_back(acc);
                    ++cp;
                }
            }
            res.total = acc;
        }
    };

    const int n_threads = std::max(1, opts.threads);
    if (n_threads == 1 || n_segments <= 1) {
        SegmentScratch scratch;
        for (std::size_t idx = 0; idx < n_segments; ++idx) run_segment(idx, scratch);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            SegmentScratch scratch;
            try {
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= n_segments) break;
                    run_segment(idx, scratch);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        const std::size_t use = std::min(static_cast<std::size_t>(n_threads), n_segments);
        pool.reserve(use);
        for (std::size_t t = 0; t < use; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // deterministic merge in segment order
    CheckpointSeries out;
    out.function_name = profile.name;
    out.x = checkpoints;
    out.sums.reserve(checkpoints.size());
    mpz_class running = 0;
    std::size_t cp_idx = 0;
    for (std::size_t idx = 0; idx < n_segments; ++idx) {
        for (const mpz_class& prefix : results[idx].checkpoint_prefix) {
            out.sums.push_back(running + prefix);
            ++cp_idx;
        }
        running += results[idx].total;
    }
    if (cp_idx != checkpoints.size())
        throw CapacityError("summatory: internal checkpoint bookkeeping mismatch");
    return out;
}

}  // namespace abelmom
