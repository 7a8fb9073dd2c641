#include <benchmark/benchmark.h>

#include "abelmom/divisor.hpp"
#include "abelmom/euler_product.hpp"
#include "abelmom/partition.hpp"
#include "abelmom/profile.hpp"
#include "abelmom/sieve.hpp"
#include "abelmom/vcoeff.hpp"
#include "abelmom/zeta.hpp"

using namespace abelmom;

static void BM_partition_table(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(partition_table(n));
}
BENCHMARK(BM_partition_table)->Arg(500)->Arg(2000);

static void BM_summatory(benchmark::State& state) {
    const auto prof = registry("abelian", 1, 64);
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    SummatoryOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(summatory(prof, {x}, opts));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x));
}
BENCHMARK(BM_summatory)->Args({1000000, 1})->Args({10000000, 1})->Args({10000000, 4});

static void BM_sieve_values(benchmark::State& state) {
    const auto prof = registry("abelian", 2, 64);
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sieve_values(prof, x));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x));
}
BENCHMARK(BM_sieve_values)->Arg(100000)->Arg(1000000);

static void BM_dirichlet_convolve(benchmark::State& state) {
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    const auto ones = ValueTable::ones(x);
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_convolve(ones, ones));
}
BENCHMARK(BM_dirichlet_convolve)->Arg(10000)->Arg(100000);

static void BM_euler_product_accel(benchmark::State& state) {
    const auto prof = registry("abelian", 2, 160);
    EulerProductOptions opts;
    opts.prime_limit = static_cast<std::uint64_t>(state.range(0));
    opts.series_order = 32;
    opts.tol = 1e-6;
    for (auto _ : state) benchmark::DoNotOptimize(euler_product(prof, opts));
}
BENCHMARK(BM_euler_product_accel)->Arg(10000)->Arg(100000);

static void BM_zeta_borwein(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zeta_borwein(0.5));
}
BENCHMARK(BM_zeta_borwein);

static void BM_zeta_euler_maclaurin(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zeta_euler_maclaurin(0.5));
}
BENCHMARK(BM_zeta_euler_maclaurin);

static void BM_exact_divisor_sum(benchmark::State& state) {
    const DivisorSignature j{{1, 2, 2, 2}};
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exact_divisor_sum(j, x));
}
BENCHMARK(BM_exact_divisor_sum)->Arg(100000000)->Arg(1000000000);

static void BM_v_from_series(benchmark::State& state) {
    const auto prof = registry("abelian", 4, 70);
    const auto params = detect_params(prof);
    for (auto _ : state) benchmark::DoNotOptimize(v_from_series(prof, params, 64));
}
BENCHMARK(BM_v_from_series);

BENCHMARK_MAIN();
