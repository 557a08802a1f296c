#include "affine/afa.hpp"
#include "affine/afca.hpp"
#include "affine/oracles.hpp"
#include "affine/sweep.hpp"
#include "affine/zoo.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace affine;

namespace {

std::string repeat(const std::string &unit, std::size_t times)
{
    std::string s;
    for (std::size_t i = 0; i < times; ++i)
        s += unit;
    return s;
}

void BM_RationalMulAdd(benchmark::State &state)
{
    Rational acc(1, 3);
    const Rational step(-7, 11);
    for (auto _ : state) {
        acc = acc * step + Rational(1, 2);
        if (acc.denominator() > BigInt("1000000000000000000000000"))
            acc = Rational(1, 3);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RationalMulAdd);

void BM_EndRun(benchmark::State &state)
{
    const AfcaMachine m(zoo::build_end());
    const std::string w = repeat("2101", static_cast<std::size_t>(state.range(0)) / 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.accept_prob(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EndRun)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_PalNpalRun(benchmark::State &state)
{
    const LasVegasAfaSpec spec = zoo::build_pal_npal(2);
    const std::string half = repeat("12", static_cast<std::size_t>(state.range(0)) / 4);
    const std::string w = half + "0" + half + "1";
    for (auto _ : state)
        benchmark::DoNotOptimize(afa::lasvegas_outcome(spec, w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PalNpalRun)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_ManyTwinsRun(benchmark::State &state)
{
    const AfcaMachine m(zoo::build_manytwins(2));
    const std::string side = repeat("120", static_cast<std::size_t>(state.range(0)) / 6);
    const std::string w = side + "3" + std::string(side.rbegin(), side.rend());
    for (auto _ : state)
        benchmark::DoNotOptimize(m.accept_prob(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ManyTwinsRun)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_EndSweep(benchmark::State &state)
{
    const Machine end = zoo::build_end();
    SweepOptions o;
    o.oracle = "end";
    o.max_length = static_cast<std::size_t>(state.range(0));
    o.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(end, o).failures);
}
BENCHMARK(BM_EndSweep)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
