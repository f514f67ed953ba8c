#include <benchmark/benchmark.h>

#include "qdhmc/dynamics.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/samplers.hpp"
#include "qdhmc/targets.hpp"

namespace {

void BM_qdhmc_propose(benchmark::State& bench) {
    const qdhmc::RegisterSpec spec(static_cast<int>(bench.range(0)),
                                   static_cast<int>(bench.range(1)));
    const auto target = qdhmc::make_double_well();
    const auto potential =
        qdhmc::tabulate_energy(spec, target.dim == spec.num_dims
                                         ? target
                                         : qdhmc::make_gaussian(spec.num_dims));
    qdhmc::ScheduleSampler sampler;
    qdhmc::Rng rng(21);
    std::vector<std::int64_t> current(static_cast<std::size_t>(spec.num_dims),
                                      static_cast<std::int64_t>(spec.points_per_dim() / 2));
    for (auto _ : bench) {
        const auto proposal = qdhmc::qdhmc_propose(current, potential, sampler, rng);
        benchmark::DoNotOptimize(proposal.indices[0]);
    }
}
BENCHMARK(BM_qdhmc_propose)
    ->Args({5, 1})
    ->Args({5, 2})
    ->Args({4, 3})
    ->Unit(benchmark::kMicrosecond);

void BM_trotter_step(benchmark::State& bench) {
    const qdhmc::RegisterSpec spec(static_cast<int>(bench.range(0)), 2);
    const auto potential = qdhmc::tabulate_energy(spec, qdhmc::make_double_well());
    const qdhmc::TrotterSchedule schedule{1.0, 1.0, 1.5, 10, true};
    auto state = qdhmc::Statevector::basis_state(
        spec, std::vector<std::int64_t>{
                  static_cast<std::int64_t>(spec.points_per_dim() / 2),
                  static_cast<std::int64_t>(spec.points_per_dim() / 2)});
    for (auto _ : bench) {
        qdhmc::trotter_evolve(state, potential, schedule);
        benchmark::DoNotOptimize(state[0]);
    }
    state.normalize();
}
BENCHMARK(BM_trotter_step)->DenseRange(3, 6, 1)->Unit(benchmark::kMicrosecond);

}  // namespace
