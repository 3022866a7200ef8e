#include <benchmark/benchmark.h>

#include "bizeta/report.hpp"

using namespace bizeta;

namespace {

HyperellipticModel model(const char* spec) { return buildModel(parseCurveSpec(spec)); }

const char* const kSpecs[] = {"p=3; f=x^3+x", "p=5; f=x^5+2*x+1", "p=3; f=x^7+x+1"};

void BM_CantorAdd(benchmark::State& state) {
    const auto M = model("p=5; f=x^5+2*x+1");
    const Jacobian J(M);
    const auto elems = jacobianElements(J);
    std::size_t i = 0;
    MumfordRep acc = J.identity();
    for (auto _ : state) {
        acc = J.add(acc, elems[i]);
        i = (i + 7) % elems.size();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CantorAdd);

void BM_PointCounts(benchmark::State& state) {
    const auto M = model("p=5; f=x^5+2*x+1");
    for (auto _ : state) {
        for (unsigned m = 1; m <= 4; ++m) benchmark::DoNotOptimize(countPoints(M, m));
    }
}
BENCHMARK(BM_PointCounts);

void BM_Strata(benchmark::State& state) {
    const auto M = model("p=5; f=x^5+2*x+1");
    const Jacobian J(M);
    const auto places = enumeratePlaces(M, 2);
    for (auto _ : state) benchmark::DoNotOptimize(classifyEffectiveDivisors(J, places));
}
BENCHMARK(BM_Strata);

void BM_GaoCount(benchmark::State& state) {
    const auto z = numeratorP(baseChangeMeasure(model(kSpecs[state.range(0)]), 1));
    for (auto _ : state) benchmark::DoNotOptimize(absFactorCount(z.P));
}
BENCHMARK(BM_GaoCount)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LiftingOracle(benchmark::State& state) {
    const auto z = numeratorP(baseChangeMeasure(model(kSpecs[state.range(0)]), 1));
    for (auto _ : state) benchmark::DoNotOptimize(absFactorCountByLifting(z.P));
}
BENCHMARK(BM_LiftingOracle)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
    RunConfig c;
    c.spec = parseCurveSpec(kSpecs[state.range(0)]);
    c.timing = false;
    for (auto _ : state) benchmark::DoNotOptimize(runAnalyze(c));
}
BENCHMARK(BM_Analyze)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
