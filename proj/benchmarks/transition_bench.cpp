#include <benchmark/benchmark.h>

#include "young/young.hpp"

using namespace young;

namespace {

// All partitions of n, one transition matrix each.
void BM_AllPartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<ShapePtr> shapes;
    for (const auto& p : partitions_of(n)) shapes.push_back(std::make_shared<const Shape>(Shape::partition(p)));
    std::uint64_t ops = 0, bound = 0;
    for (auto _ : state) {
        ops = bound = 0;
        for (const auto& sh : shapes) {
            SeminormalModule m(AlgebraSpec::symmetric(), sh);
            RecursionStats st;
            benchmark::DoNotOptimize(transition_recursive(m, 1, &st));
            std::uint64_t f = m.dim();
            ops += st.ops;
            bound += 2 * (f * f + f);
        }
    }
    state.counters["ops"] = static_cast<double>(ops);
    state.counters["bound"] = static_cast<double>(bound);
}
BENCHMARK(BM_AllPartitions)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_Staircase(benchmark::State& state) {
    auto sh = std::make_shared<const Shape>(Shape::parse("4,3,2,1"));
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeminormalModule m(AlgebraSpec::symmetric(), sh);
        benchmark::DoNotOptimize(transition_recursive(m, threads));
    }
}
BENCHMARK(BM_Staircase)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HeckeSymbolic(benchmark::State& state) {
    auto sh = std::make_shared<const Shape>(Shape::parse("3,2,1"));
    for (auto _ : state) {
        SeminormalModule m(AlgebraSpec::hecke_A(), sh);
        benchmark::DoNotOptimize(transition_recursive(m));
    }
}
BENCHMARK(BM_HeckeSymbolic)->Unit(benchmark::kMillisecond);

void BM_Graph(benchmark::State& state) {
    auto sh = std::make_shared<const Shape>(Shape::parse("4,3,1,1"));
    for (auto _ : state) benchmark::DoNotOptimize(BruhatGraph(sh).size());
}
BENCHMARK(BM_Graph)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
