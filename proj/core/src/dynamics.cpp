#include "qdhmc/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdhmc/errors.hpp"
#include "qdhmc/spectral.hpp"

namespace qdhmc {

namespace {

// amplitude *= table[axis index of `dim`], table length N.
void apply_axis_diagonal(Statevector& state, int dim, const std::vector<cdouble>& table) {
    const auto& spec = state.spec();
    const std::size_t n = spec.points_per_dim();
    const std::size_t stride = std::size_t{1}
                               << (spec.qubits_per_dim * (spec.num_dims - 1 - dim));
    const std::size_t block = stride * n;
    auto& amps = state.amplitudes();
    for (std::size_t outer = 0; outer < state.size(); outer += block)
        for (std::size_t k = 0; k < n; ++k) {
            const cdouble w = table[k];
            const std::size_t base = outer + k * stride;
            for (std::size_t inner = 0; inner < stride; ++inner) amps[base + inner] *= w;
        }
}

std::vector<cdouble> kinetic_phase_table(const RegisterSpec& spec, double angle) {
    const auto xs = grid_coords(spec);  // momentum eigenvalues = grid coordinates
    std::vector<cdouble> table(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
        table[k] = std::polar(1.0, -angle * xs[k] * xs[k] / 2.0);
    return table;
}

}  // namespace

void TrotterSchedule::validate() const {
    if (!(eta > 0.0) || !(lambda > 0.0))
        throw ConfigError("TrotterSchedule: eta and lambda must be positive");
    if (!(total_time > 0.0))
        throw ConfigError("TrotterSchedule: total_time must be positive");
    if (steps < 1)
        throw ConfigError("TrotterSchedule: steps must be >= 1");
}

void ScheduleSampler::validate() const {
    if (!(t_min > 0.0) || t_max < t_min)
        throw ConfigError("ScheduleSampler: need 0 < t_min <= t_max");
    if (r_min < 1 || r_max < r_min)
        throw ConfigError("ScheduleSampler: need 1 <= r_min <= r_max");
    if (!(eta_min > 0.0) || eta_max < eta_min)
        throw ConfigError("ScheduleSampler: need 0 < eta_min <= eta_max");
    if (!(lambda_min > 0.0) || lambda_max < lambda_min)
        throw ConfigError("ScheduleSampler: need 0 < lambda_min <= lambda_max");
}

TrotterSchedule sample_schedule(const ScheduleSampler& sampler, Rng& rng) {
    sampler.validate();
    TrotterSchedule s;
    s.total_time = sampler.t_min == sampler.t_max
                       ? sampler.t_min
                       : uniform_real(rng, sampler.t_min, sampler.t_max);
    s.steps = sampler.r_min == sampler.r_max
                  ? sampler.r_min
                  : static_cast<int>(uniform_int(rng, sampler.r_min, sampler.r_max));
    s.eta = sampler.eta_min == sampler.eta_max
                ? sampler.eta_min
                : uniform_real(rng, sampler.eta_min, sampler.eta_max);
    s.lambda = sampler.lambda_min == sampler.lambda_max
                   ? sampler.lambda_min
                   : uniform_real(rng, sampler.lambda_min, sampler.lambda_max);
    s.flip_momentum = sampler.flip_momentum;
    return s;
}

GridPotential tabulate_energy(const RegisterSpec& spec, const Target& target) {
    if (target.dim != spec.num_dims)
        throw ConfigError("tabulate_energy: target dimension " + std::to_string(target.dim) +
                          " does not match register dimension " +
                          std::to_string(spec.num_dims));
    const auto xs = grid_coords(spec);
    const std::size_t n = spec.points_per_dim();
    const std::size_t mask = n - 1;
    GridPotential pot{spec, std::vector<double>(spec.total_points())};
    std::vector<double> x(static_cast<std::size_t>(spec.num_dims));
    for (std::size_t flat = 0; flat < pot.values.size(); ++flat) {
        std::size_t rest = flat;
        for (int i = spec.num_dims - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = xs[rest & mask];
            rest >>= spec.qubits_per_dim;
        }
        const double f = target.energy(x);
        if (!std::isfinite(f)) {
            std::ostringstream msg;
            msg << "non-finite energy for target '" << target.name << "' at grid point (";
            for (std::size_t i = 0; i < x.size(); ++i)
                msg << (i ? ", " : "") << x[i];
            msg << ")";
            throw EvolutionError(msg.str());
        }
        pot.values[flat] = f;
    }
    return pot;
}

void apply_potential_phase(Statevector& state, const GridPotential& potential, double angle) {
    if (potential.values.size() != state.size())
        throw ConfigError("apply_potential_phase: potential grid does not match state");
    auto& amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        amps[i] *= std::polar(1.0, -angle * potential.values[i]);
}

void apply_potential_phase(Statevector& state, const Target& target, double angle) {
    apply_potential_phase(state, tabulate_energy(state.spec(), target), angle);
}

void apply_kinetic_phase(Statevector& state, double angle) {
    const auto table = kinetic_phase_table(state.spec(), angle);
    for (int dim = 0; dim < state.spec().num_dims; ++dim) {
        to_momentum_basis(state, dim);
        apply_axis_diagonal(state, dim, table);
        from_momentum_basis(state, dim);
    }
}

void trotter_evolve(Statevector& state, const GridPotential& potential,
                    const TrotterSchedule& schedule) {
    schedule.validate();
    if (potential.values.size() != state.size())
        throw ConfigError("trotter_evolve: potential grid does not match state");

    // All steps share the same angles, so both phase tables are built once.
    const double va = schedule.potential_angle();
    std::vector<cdouble> vtab(potential.values.size());
    for (std::size_t i = 0; i < vtab.size(); ++i)
        vtab[i] = std::polar(1.0, -va * potential.values[i]);
    const auto ktab = kinetic_phase_table(state.spec(), schedule.kinetic_angle());

    auto& amps = state.amplitudes();
    for (int step = 0; step < schedule.steps; ++step) {
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= vtab[i];
        for (int dim = 0; dim < state.spec().num_dims; ++dim) {
            to_momentum_basis(state, dim);
            apply_axis_diagonal(state, dim, ktab);
            from_momentum_basis(state, dim);
        }
    }
    if (schedule.flip_momentum) momentum_flip(state);
}

void trotter_evolve(Statevector& state, const Target& target, const TrotterSchedule& schedule) {
    trotter_evolve(state, tabulate_energy(state.spec(), target), schedule);
}

double expectation_hamiltonian(const Statevector& state, const GridPotential& potential,
                               double eta, double lambda) {
    if (potential.values.size() != state.size())
        throw ConfigError("expectation_hamiltonian: potential grid does not match state");
    double kinetic = 0.0;
    const auto xs = grid_coords(state.spec());
    for (int dim = 0; dim < state.spec().num_dims; ++dim) {
        Statevector copy = state;
        to_momentum_basis(copy, dim);
        const int shift = state.spec().qubits_per_dim * (state.spec().num_dims - 1 - dim);
        const std::size_t mask = state.spec().points_per_dim() - 1;
        const auto& amps = copy.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double p = xs[(i >> shift) & mask];
            kinetic += std::norm(amps[i]) * p * p;
        }
    }
    return eta * kinetic / 2.0 + lambda * state.expectation_diagonal(potential.values);
}

}  // namespace qdhmc
