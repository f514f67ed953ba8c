#include "qdhmc/samplers.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qdhmc/errors.hpp"

namespace qdhmc {

bool metropolis_accept(double f_x, double f_y, Rng& rng) {
    if (!std::isfinite(f_x) || !std::isfinite(f_y)) {
        std::fprintf(stderr, "[qdhmc] warning: non-finite energy in acceptance test, rejecting\n");
        return false;
    }
    const double log_ratio = f_x - f_y;
    if (log_ratio >= 0.0) return true;
    return std::log(uniform01_pos(rng)) < log_ratio;
}

void HmcParams::validate(int dim) const {
    if (!(step_size > 0.0)) throw ConfigError("HmcParams: step_size must be positive");
    if (leapfrog_steps < 1) throw ConfigError("HmcParams: leapfrog_steps must be >= 1");
    if (!mass.empty()) {
        if (mass.size() != static_cast<std::size_t>(dim))
            throw ConfigError("HmcParams: mass length does not match dimension");
        for (double m : mass)
            if (!(m > 0.0)) throw ConfigError("HmcParams: mass entries must be positive");
    }
}

std::vector<double> ChainResult::point(std::size_t i) const {
    const auto d = static_cast<std::size_t>(dim);
    return {points.begin() + static_cast<std::ptrdiff_t>(i * d),
            points.begin() + static_cast<std::ptrdiff_t>((i + 1) * d)};
}

double ChainResult::acceptance_rate() const {
    if (accepted.empty()) return 0.0;
    std::size_t n = 0;
    for (auto a : accepted) n += a;
    return static_cast<double>(n) / static_cast<double>(accepted.size());
}

QdhmcProposal qdhmc_propose(const std::vector<std::int64_t>& current,
                            const GridPotential& potential,
                            const ScheduleSampler& sampler, Rng& rng) {
    QdhmcProposal proposal;
    proposal.schedule = sample_schedule(sampler, rng);
    Statevector state = Statevector::basis_state(potential.spec, current);
    trotter_evolve(state, potential, proposal.schedule);
    proposal.indices = state.sample_measurement(rng);
    return proposal;
}

ChainResult run_qdhmc(const RegisterSpec& spec, const Target& target,
                      const ScheduleSampler& sampler, std::size_t n_samples, Rng& rng,
                      std::optional<std::vector<std::int64_t>> init) {
    sampler.validate();
    const GridPotential potential = tabulate_energy(spec, target);

    std::vector<std::int64_t> current;
    if (init) {
        current = *init;
    } else {
        current.resize(static_cast<std::size_t>(spec.num_dims));
        for (auto& k : current)
            k = uniform_int(rng, 0, static_cast<std::int64_t>(spec.points_per_dim()) - 1);
    }
    std::size_t flat = pack_indices(spec, current);
    double f_current = potential.values[flat];

    ChainResult result;
    result.dim = spec.num_dims;
    result.points.reserve(n_samples * static_cast<std::size_t>(spec.num_dims));
    result.energies.reserve(n_samples);
    result.accepted.reserve(n_samples);
    result.flat_indices.reserve(n_samples);
    result.schedules.reserve(n_samples);

    for (std::size_t step = 0; step < n_samples; ++step) {
        bool accepted = false;
        TrotterSchedule used{};
        try {
            QdhmcProposal proposal = qdhmc_propose(current, potential, sampler, rng);
            used = proposal.schedule;
            const std::size_t flat_y = pack_indices(spec, proposal.indices);
            if (metropolis_accept(f_current, potential.values[flat_y], rng)) {
                current = std::move(proposal.indices);
                flat = flat_y;
                f_current = potential.values[flat_y];
                accepted = true;
            }
        } catch (const EvolutionError&) {
            // aborted proposal counts as a rejected step
        }
        for (auto k : current)
            result.points.push_back(grid_coord(spec, k));
        result.energies.push_back(f_current);
        result.accepted.push_back(accepted ? 1 : 0);
        result.flat_indices.push_back(flat);
        result.schedules.push_back(used);
    }
    return result;
}

PhasePoint leapfrog(const std::vector<double>& x, const std::vector<double>& p,
                    const Target& target, double step_size, int leapfrog_steps,
                    const std::vector<double>& mass) {
    const std::size_t d = x.size();
    PhasePoint z{x, p};
    auto finite = [](const std::vector<double>& v) {
        for (double a : v)
            if (!std::isfinite(a)) return false;
        return true;
    };
    for (int step = 0; step < leapfrog_steps; ++step) {
        auto g = target.grad_log_prob(z.position);
        for (std::size_t i = 0; i < d; ++i)
            z.momentum[i] += 0.5 * step_size * g[i] / target.temperature;
        for (std::size_t i = 0; i < d; ++i) {
            const double inv_m = mass.empty() ? 1.0 : 1.0 / mass[i];
            z.position[i] += step_size * inv_m * z.momentum[i];
        }
        if (!finite(z.position))
            throw DivergenceError("leapfrog: non-finite position");
        g = target.grad_log_prob(z.position);
        for (std::size_t i = 0; i < d; ++i)
            z.momentum[i] += 0.5 * step_size * g[i] / target.temperature;
        if (!finite(z.momentum))
            throw DivergenceError("leapfrog: non-finite momentum");
    }
    return z;
}

ChainResult run_hmc(const Target& target, const HmcParams& params, std::size_t n_samples,
                    Rng& rng, const std::vector<double>& init) {
    params.validate(target.dim);
    if (init.size() != static_cast<std::size_t>(target.dim))
        throw ConfigError("run_hmc: init dimension mismatch");

    const std::size_t d = static_cast<std::size_t>(target.dim);
    std::vector<double> x = init;
    double f_current = target.energy(x);

    ChainResult result;
    result.dim = target.dim;
    result.points.reserve(n_samples * d);
    result.energies.reserve(n_samples);
    result.accepted.reserve(n_samples);
    result.momenta.reserve(n_samples * d);

    std::vector<double> p(d);
    for (std::size_t step = 0; step < n_samples; ++step) {
        for (std::size_t i = 0; i < d; ++i) {
            const double m = params.mass.empty() ? 1.0 : params.mass[i];
            p[i] = std::sqrt(m) * standard_normal(rng);
        }
        double kinetic0 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double m = params.mass.empty() ? 1.0 : params.mass[i];
            kinetic0 += p[i] * p[i] / (2.0 * m);
        }
        const double h0 = kinetic0 + f_current;

        bool accepted = false;
        try {
            PhasePoint z = leapfrog(x, p, target, params.step_size,
                                    params.leapfrog_steps, params.mass);
            double kinetic1 = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const double m = params.mass.empty() ? 1.0 : params.mass[i];
                kinetic1 += z.momentum[i] * z.momentum[i] / (2.0 * m);
            }
            const double f_new = target.energy(z.position);
            if (metropolis_accept(h0, kinetic1 + f_new, rng)) {
                x = std::move(z.position);
                f_current = f_new;
                accepted = true;
            }
        } catch (const DivergenceError&) {
            // divergent trajectory counts as a rejected step
        }
        result.points.insert(result.points.end(), x.begin(), x.end());
        result.energies.push_back(f_current);
        result.accepted.push_back(accepted ? 1 : 0);
        result.momenta.insert(result.momenta.end(), p.begin(), p.end());
    }
    return result;
}

std::vector<double> uniform_box_point(double lo, double hi, int dim, Rng& rng) {
    if (!(lo < hi)) throw ConfigError("uniform_box_point: need lo < hi");
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (auto& v : x) v = uniform_real(rng, lo, hi);
    return x;
}

}  // namespace qdhmc
