#include "qdhmc/diagnostics.hpp"

#include <cmath>
#include <cstdio>

#include "qdhmc/errors.hpp"

namespace qdhmc {

AutocorrEstimate autocorrelation_time(const std::vector<double>& series,
                                      double window_factor) {
    const std::size_t n = series.size();
    if (n < 10)
        throw InsufficientDataError("autocorrelation_time: need at least 10 samples, got " +
                                    std::to_string(n));
    bool constant = true;
    for (double v : series)
        if (v != series.front()) {
            constant = false;
            break;
        }
    if (constant)
        throw ZeroVarianceError("autocorrelation_time: constant series");

    double mu = 0.0;
    for (double v : series) mu += v;
    mu /= static_cast<double>(n);

    std::vector<double> dev(n);
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dev[i] = series[i] - mu;
        denom += dev[i] * dev[i];
    }
    if (denom == 0.0)
        throw ZeroVarianceError("autocorrelation_time: constant series");

    AutocorrEstimate est;
    est.rho.push_back(1.0);
    const std::size_t t_cap = std::min<std::size_t>(n - 1, 10000);
    double rho_sum = 0.0;
    double tau = 0.5;
    std::size_t window = t_cap;
    for (std::size_t t = 1; t <= t_cap; ++t) {
        double num = 0.0;
        for (std::size_t i = 0; i + t < n; ++i) num += dev[i] * dev[i + t];
        const double rho = static_cast<double>(n) * num /
                           (static_cast<double>(n - t) * denom);
        est.rho.push_back(rho);
        rho_sum += rho;
        tau = 0.5 + rho_sum;
        if (static_cast<double>(t) >= window_factor * tau) {
            window = t;
            break;
        }
    }
    est.window = window;
    est.tau = std::max(tau, 0.5);
    return est;
}

double effective_sample_size(const std::vector<double>& series) {
    const auto est = autocorrelation_time(series);
    return static_cast<double>(series.size()) / (2.0 * est.tau);
}

std::vector<AcceptanceStat> acceptance_curve(
    const std::vector<std::pair<double, std::vector<ChainResult>>>& grouped) {
    std::vector<AcceptanceStat> table;
    for (const auto& [temperature, chains] : grouped) {
        if (chains.empty()) {
            std::fprintf(stderr,
                         "[qdhmc] warning: no repetitions at temperature %g, skipping\n",
                         temperature);
            continue;
        }
        AcceptanceStat stat;
        stat.temperature = temperature;
        stat.repetitions = chains.size();
        for (const auto& chain : chains) stat.mean += chain.acceptance_rate();
        stat.mean /= static_cast<double>(chains.size());
        double var = 0.0;
        for (const auto& chain : chains) {
            const double d = chain.acceptance_rate() - stat.mean;
            var += d * d;
        }
        stat.stddev = std::sqrt(var / static_cast<double>(chains.size()));
        table.push_back(stat);
    }
    return table;
}

}  // namespace qdhmc
