#include <benchmark/benchmark.h>

#include "ggg/certify.hpp"
#include "ggg/families.hpp"

namespace {

ggg::Graph member(int m)
{
    return ggg::families::build({m % 2 ? ggg::Family::G : ggg::Family::H, m});
}

void BM_Build(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(member(m));
}

void BM_ChromaticNumber(benchmark::State& state)
{
    auto g = member(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ggg::certify::chromatic_number(g));
}

void BM_HamiltonianCycle(benchmark::State& state)
{
    auto g = member(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ggg::certify::find_hamiltonian_cycle(g));
}

void BM_Maximality(benchmark::State& state)
{
    auto g = member(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ggg::certify::maximality_check(g));
}

void BM_Girth(benchmark::State& state)
{
    auto g = member(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ggg::certify::girth(g));
}

}  // namespace

BENCHMARK(BM_Build)->DenseRange(5, 15, 2)->DenseRange(6, 16, 2);
BENCHMARK(BM_ChromaticNumber)->DenseRange(5, 13, 2)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HamiltonianCycle)->DenseRange(5, 15, 1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Maximality)->DenseRange(5, 15, 1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Girth)->DenseRange(5, 15, 1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
