#include <benchmark/benchmark.h>
#include <sl2rep/chars.hpp>
#include <sl2rep/fixdim.hpp>
#include <sl2rep/group.hpp>
#include <sl2rep/verify.hpp>

using namespace sl2rep;

static void BM_CycMul(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto x = root_of_unity(n, 1) + nu(n, 2);
    const auto y = root_of_unity(n, 3) - root_of_unity(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycMul)->Arg(12)->Arg(24)->Arg(56)->Arg(168);

static void BM_ComplexTable(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(complex_table(q));
}
BENCHMARK(BM_ComplexTable)->Arg(13)->Arg(47)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyPartition(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ConjugacyPartition(q));
}
BENCHMARK(BM_ConjugacyPartition)->Arg(7)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

static void BM_FixedDimReport(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(full_report(q));
}
BENCHMARK(BM_FixedDimReport)->Arg(13)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(q));
}
BENCHMARK(BM_VerifyAll)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
