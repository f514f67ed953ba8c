#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdhmc/dynamics.hpp"
#include "qdhmc/grid.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/targets.hpp"

namespace qdhmc {

// Accept with probability min{1, e^{f_x - f_y}} where f is the energy.
// Evaluated in log space so enormous energy gaps never overflow; consumes
// one uniform draw only for uphill moves. Non-finite energies reject with
// a warning on stderr.
bool metropolis_accept(double f_x, double f_y, Rng& rng);

struct HmcParams {
    double step_size = 0.1;
    int leapfrog_steps = 10;
    std::vector<double> mass;  // per-dimension; empty means unit mass

    void validate(int dim) const;  // throws ConfigError
};

// One chain's output. All traces have one entry per step; `accepted[i]`
// false means the point repeats the previous one.
struct ChainResult {
    int dim = 1;
    std::vector<double> points;             // row-major, steps x dim
    std::vector<double> energies;           // steps
    std::vector<std::uint8_t> accepted;     // steps
    std::vector<std::size_t> flat_indices;  // grid chain only
    std::vector<TrotterSchedule> schedules; // grid chain only
    std::vector<double> momenta;            // leapfrog chain only, steps x dim

    std::size_t steps() const { return energies.size(); }
    std::vector<double> point(std::size_t i) const;
    double acceptance_rate() const;  // 0 for an empty chain
};

struct QdhmcProposal {
    std::vector<std::int64_t> indices;
    TrotterSchedule schedule;
};

// Algorithm: prepare the basis state at `current`, draw a schedule, evolve,
// measure once. The proposal distribution is symmetric between any two
// grid points.
QdhmcProposal qdhmc_propose(const std::vector<std::int64_t>& current,
                            const GridPotential& potential,
                            const ScheduleSampler& sampler, Rng& rng);

// Full chain over grid points. `init` empty means a uniform-random grid
// point (one index draw per dimension, in dimension order).
ChainResult run_qdhmc(const RegisterSpec& spec, const Target& target,
                      const ScheduleSampler& sampler, std::size_t n_samples, Rng& rng,
                      std::optional<std::vector<std::int64_t>> init = std::nullopt);

struct PhasePoint {
    std::vector<double> position;
    std::vector<double> momentum;
};

// L iterations of: half momentum kick with grad log pi, full position
// drift with M^{-1} p, half kick. Throws DivergenceError when the
// trajectory leaves the representable range.
PhasePoint leapfrog(const std::vector<double>& x, const std::vector<double>& p,
                    const Target& target, double step_size, int leapfrog_steps,
                    const std::vector<double>& mass);

// Momentum resampled from N(0, M) every step; acceptance uses the full
// Hamiltonian H = p^T M^{-1} p / 2 + energy(x).
ChainResult run_hmc(const Target& target, const HmcParams& params, std::size_t n_samples,
                    Rng& rng, const std::vector<double>& init);

// Uniform start inside [lo, hi]^dim, one coordinate draw per dimension.
std::vector<double> uniform_box_point(double lo, double hi, int dim, Rng& rng);

}  // namespace qdhmc
