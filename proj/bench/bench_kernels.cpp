// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "oospc/constructions.hpp"
#include "oospc/search.hpp"

using namespace oospc;

namespace {

const Code& big_code() {
    static const Code c = construct_optimal(50, 50, 2);
    return c;
}

void BM_VerifyShiftParallel(benchmark::State& state) {
    const Code& c = big_code();
    for (auto _ : state) benchmark::DoNotOptimize(verify_shift(c).valid());
}

void BM_VerifyShiftSerial(benchmark::State& state) {
    const Code& c = big_code();
    for (auto _ : state) benchmark::DoNotOptimize(verify_shift_reference(c).valid());
}

void BM_VerifyDiff(benchmark::State& state) {
    const Code& c = big_code();
    for (auto _ : state) benchmark::DoNotOptimize(verify_diff(c).valid());
}

void max_code_run(benchmark::State& state, bool parallel) {
    SearchOptions opt;
    opt.cap_by_bound = false;
    opt.parallel = parallel;
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(max_code(m, n, 2, opt).best_size);
}

void BM_MaxCodeParallel(benchmark::State& state) { max_code_run(state, true); }
void BM_MaxCodeSerial(benchmark::State& state) { max_code_run(state, false); }

}  // namespace

BENCHMARK(BM_VerifyShiftParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyShiftSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyDiff)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCodeParallel)->Args({6, 6})->Args({4, 8})->Args({2, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCodeSerial)->Args({6, 6})->Args({4, 8})->Args({2, 18})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
