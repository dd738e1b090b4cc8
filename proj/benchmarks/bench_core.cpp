#include <benchmark/benchmark.h>

#include <random>

#include "vaw/wordproblem.hpp"

using namespace vaw;

namespace {

void BM_RootEnumeration(benchmark::State& state) {
    auto g = CoxeterGraph::parse("family D 4");
    for (auto _ : state) {
        RootSystem rs = RootSystem::enumerate(g, std::nullopt);
        benchmark::DoNotOptimize(rs.roots().size());
    }
}
BENCHMARK(BM_RootEnumeration);

void BM_GroupEnumeration(benchmark::State& state) {
    auto g = CoxeterGraph::parse("family A 3");
    for (auto _ : state) {
        auto els = enumerate_group(g, 1000);
        benchmark::DoNotOptimize(els.size());
    }
}
BENCHMARK(BM_GroupEnumeration);

void BM_PairOrbitTable(benchmark::State& state) {
    auto g = CoxeterGraph::parse("family B 2");
    for (auto _ : state) {
        PairOrbitTable t = PairOrbitTable::build(g);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_PairOrbitTable);

void BM_GarsideNormalForm(benchmark::State& state) {
    auto g = CoxeterGraph::parse("family A 2");
    std::mt19937 rng(7);
    SignedWord w;
    for (long i = 0; i < state.range(0); ++i)
        w.emplace_back(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
    for (auto _ : state) {
        GarsideForm f = garside_normal_form(g, w);
        benchmark::DoNotOptimize(f.inf);
    }
}
BENCHMARK(BM_GarsideNormalForm)->Arg(16)->Arg(64);

void BM_ExactSign(benchmark::State& state) {
    auto ctx = FieldContext::make({4, 5});
    FieldElement t = FieldElement::theta(ctx);
    FieldElement probe = t * t * t - FieldElement::rational(ctx, Rational(749, 100));
    for (auto _ : state) benchmark::DoNotOptimize(probe.sign());
}
BENCHMARK(BM_ExactSign);

void BM_VaSolve(benchmark::State& state) {
    auto g = CoxeterGraph::parse("family B 2");
    MhatOracle oracle(g);
    std::mt19937 rng(11);
    VAWord w(g);
    for (int i = 0; i < 15; ++i) {
        bool sigma = rng() % 2 == 0;
        w.push(sigma ? LetterKind::sigma : LetterKind::tau, static_cast<int>(rng() % 2),
               rng() % 2 ? 1 : -1);
    }
    VAWord prod = w * w.inverse();
    for (auto _ : state) {
        SolveOutcome out = va_solve(g, prod, oracle);
        benchmark::DoNotOptimize(out.verdict);
    }
}
BENCHMARK(BM_VaSolve);

}  // namespace

BENCHMARK_MAIN();
