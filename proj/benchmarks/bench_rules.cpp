#include "mincub/biangle.hpp"
#include "mincub/composed.hpp"
#include "mincub/opq1d.hpp"
#include "mincub/oracle.hpp"
#include "mincub/squaremin.hpp"

#include <benchmark/benchmark.h>

using namespace mincub;

static void BM_GaussJacobi(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(0.5, -0.5, n));
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(4)->Range(8, 512);

static void BM_BiangleRule(benchmark::State& state) {
    const auto spec = WeightSpec::biangle(-0.5, -0.5, Gamma::plus_half);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_cubature_biangle(spec, n));
}
BENCHMARK(BM_BiangleRule)->Arg(10)->Arg(20)->Arg(40);

static void BM_EvenRule(benchmark::State& state) {
    const auto spec = WeightSpec::square(0.5, 0.0, Gamma::minus_half);
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_rule_even(spec, m));
}
BENCHMARK(BM_EvenRule)->Arg(4)->Arg(12)->Arg(32);

static void BM_OddRule(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_rule_odd(0.5, 0.0, Gamma::minus_half, m));
}
BENCHMARK(BM_OddRule)->Arg(2)->Arg(5)->Arg(8);

static void BM_ComposedRule(benchmark::State& state) {
    const auto spec = WeightSpec::composed(0.5, 0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(composed_rule(spec, 6));
}
BENCHMARK(BM_ComposedRule)->Arg(1)->Arg(2)->Arg(4);

static void BM_SquareMomentTable(benchmark::State& state) {
    const auto spec = WeightSpec::square(0.5, 0.0, Gamma::plus_half);
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(square_moment_table(spec, d));
}
BENCHMARK(BM_SquareMomentTable)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_CertifyEvenRule(benchmark::State& state) {
    const auto spec = WeightSpec::square(-0.5, -0.5, Gamma::minus_half);
    const auto rule = minimal_rule_even(spec, 12);
    const auto table = square_moment_table(spec, 48, Basis::chebyshev);
    for (auto _ : state) benchmark::DoNotOptimize(certify(rule, table, 48));
}
BENCHMARK(BM_CertifyEvenRule)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
