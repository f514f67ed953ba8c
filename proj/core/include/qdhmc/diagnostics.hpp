#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdhmc/samplers.hpp"

namespace qdhmc {

// Integrated autocorrelation time with the self-consistent truncation
// window (smallest t with t >= window_factor * tau_t).
struct AutocorrEstimate {
    double tau = 0.5;             // floored at the iid value 1/2
    std::vector<double> rho;      // rho[0] = 1, then rho[t] up to the window
    std::size_t window = 0;
};

// rho(t) = [N * sum_{i<N-t} (f_i-mu)(f_{i+t}-mu)] / [(N-t) * sum (f_i-mu)^2],
// tau = 1/2 + sum_{t<=W} rho(t). Throws InsufficientDataError for series
// shorter than 10 and ZeroVarianceError for constant series. The window
// search is capped at min(N-1, 10^4).
AutocorrEstimate autocorrelation_time(const std::vector<double>& series,
                                      double window_factor = 5.0);

// N / (2 tau); at most N, and approaches N for an iid series.
double effective_sample_size(const std::vector<double>& series);

struct AcceptanceStat {
    double temperature = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // population std over repetition rates
    std::size_t repetitions = 0;
};

// Per-temperature mean and spread of per-repetition acceptance rates.
// Empty groups are skipped with a warning.
std::vector<AcceptanceStat> acceptance_curve(
    const std::vector<std::pair<double, std::vector<ChainResult>>>& grouped);

}  // namespace qdhmc
