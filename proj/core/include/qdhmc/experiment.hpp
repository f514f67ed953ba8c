#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdhmc/dynamics.hpp"
#include "qdhmc/grid.hpp"
#include "qdhmc/samplers.hpp"

namespace qdhmc {

// Parameters for per-step wavefunction probability dumps (2 dims max).
struct SnapshotConfig {
    double total_time = 2.0;
    int steps = 10;
    double eta = 1.7;
    double lambda = 0.5;
    std::vector<std::int64_t> start;  // empty: N/2 + max(1, N/8) per dimension
};

struct ExperimentConfig {
    std::string target_name = "gaussian";
    int dim = 1;
    std::string sampler = "qdhmc";  // "qdhmc" | "hmc"
    RegisterSpec register_spec{5, 1};
    ScheduleSampler schedule;
    HmcParams hmc;
    std::vector<double> temperatures{1.0};
    std::size_t n_samples = 1000;
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    int workers = 1;  // 0: one per hardware thread
    SnapshotConfig snapshot;

    void validate() const;  // throws ConfigError
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

// Runs repetitions x temperatures chains on a worker pool. Chain seeds are
// derived from (seed, temperature index, repetition index), and results are
// written in a fixed order after all workers join, so output bytes do not
// depend on the worker count. Writes one trace_T<temp>.csv per temperature
// (columns: rep, step, accepted, energy, coord_0..coord_{n-1}) plus
// summary.json; returns the summary document.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

// Cartesian grid search over hyperparameter lists, e.g.
// {"step_size": [0.01, 0.1], "leapfrog_steps": [5, 10]} for hmc or
// {"eta": [...], "lambda": [...], "t_min": [...], "t_max": [...],
//  "r_min": [...], "r_max": [...]} for qdhmc. Ranks candidates by
// metric "final_energy" (mean last-step energy) or "tau" (mean energy-trace
// autocorrelation time), ascending. Writes sweep.json; warns when the best
// candidate sits on the grid boundary.
nlohmann::json sweep(const ExperimentConfig& base, const nlohmann::json& grid,
                     const std::string& metric);

// Probability grid after every evolution step (step 0 = the prepared basis
// state), each normalized to 1. Writes snapshot_step<k>.csv files when
// out_dir is non-empty. Only 1- and 2-dimensional registers are supported.
std::vector<std::vector<double>> snapshot_wavefunction(const ExperimentConfig& cfg);

}  // namespace qdhmc
