#include <benchmark/benchmark.h>

#include "qdhmc/grid.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/spectral.hpp"
#include "qdhmc/statevector.hpp"

namespace {

qdhmc::Statevector random_state(const qdhmc::RegisterSpec& spec, std::uint64_t seed) {
    qdhmc::Rng rng(seed);
    qdhmc::Statevector state(spec);
    for (std::size_t k = 0; k < state.size(); ++k)
        state[k] = {qdhmc::standard_normal(rng), qdhmc::standard_normal(rng)};
    state.normalize();
    return state;
}

void BM_centered_fourier_1d(benchmark::State& bench) {
    const qdhmc::RegisterSpec spec(static_cast<int>(bench.range(0)), 1);
    auto state = random_state(spec, 11);
    for (auto _ : bench) {
        qdhmc::to_momentum_basis(state, 0);
        qdhmc::from_momentum_basis(state, 0);
        benchmark::DoNotOptimize(state[0]);
    }
    bench.SetComplexityN(static_cast<benchmark::IterationCount>(spec.total_points()));
}
BENCHMARK(BM_centered_fourier_1d)->DenseRange(4, 12, 2)->Complexity(benchmark::oNLogN);

void BM_centered_fourier_2d(benchmark::State& bench) {
    const qdhmc::RegisterSpec spec(static_cast<int>(bench.range(0)), 2);
    auto state = random_state(spec, 12);
    for (auto _ : bench) {
        for (int dim = 0; dim < 2; ++dim) qdhmc::to_momentum_basis(state, dim);
        for (int dim = 0; dim < 2; ++dim) qdhmc::from_momentum_basis(state, dim);
        benchmark::DoNotOptimize(state[0]);
    }
}
BENCHMARK(BM_centered_fourier_2d)->DenseRange(3, 8, 1);

void BM_momentum_flip(benchmark::State& bench) {
    const qdhmc::RegisterSpec spec(static_cast<int>(bench.range(0)), 1);
    auto state = random_state(spec, 13);
    for (auto _ : bench) {
        qdhmc::momentum_flip(state);
        benchmark::DoNotOptimize(state[0]);
    }
}
BENCHMARK(BM_momentum_flip)->DenseRange(4, 12, 2);

}  // namespace

BENCHMARK_MAIN();
