// Informational micro-benchmarks: packed triangular/simplex storage versus a
// zero-padded square/cube layout, plus evaluation and inversion throughput.
#include "pairkit/inverse.hpp"
#include "pairkit/storage.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace pairkit;

namespace {

constexpr long long kOrder = 512;

void BM_PackedTriangularFill(benchmark::State& state) {
    PackedTriangular<long long> m(kOrder);
    for (auto _ : state) {
        for (long long r = 0; r < kOrder; ++r)
            for (long long c = 0; c <= r; ++c) m.at(r, c) = r + c;
        benchmark::DoNotOptimize(m.data());
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(m.size()) * sizeof(long long));
}
BENCHMARK(BM_PackedTriangularFill);

void BM_PaddedSquareFill(benchmark::State& state) {
    std::vector<long long> m(kOrder * kOrder, 0);
    for (auto _ : state) {
        for (long long r = 0; r < kOrder; ++r)
            for (long long c = 0; c <= r; ++c) m[std::size_t(r * kOrder + c)] = r + c;
        benchmark::DoNotOptimize(m.data());
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(m.size()) * sizeof(long long));
}
BENCHMARK(BM_PaddedSquareFill);

void BM_MappingEval(benchmark::State& state) {
    auto m = builtin("rosenberg_strong");
    Int z = 0;
    for (auto _ : state) {
        for (Int x = 0; x <= 30; ++x)
            for (Int y = 0; y <= 30; ++y) z += m.eval({x, y});
        benchmark::DoNotOptimize(z);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * 31 * 31);
}
BENCHMARK(BM_MappingEval);

void BM_InvertClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        for (Int z = 0; z < 1000; ++z) benchmark::DoNotOptimize(invert_cantor1(z));
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * 1000);
}
BENCHMARK(BM_InvertClosedForm);

}  // namespace

BENCHMARK_MAIN();
