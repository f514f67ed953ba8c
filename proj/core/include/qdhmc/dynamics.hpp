#pragma once

#include "qdhmc/rng.hpp"
#include "qdhmc/statevector.hpp"
#include "qdhmc/targets.hpp"

namespace qdhmc {

// Parameters of one proposal evolution under H = eta*p^2/2 + lambda*f(x),
// simulated as `steps` alternating phase factors over total_time.
struct TrotterSchedule {
    double eta = 1.0;
    double lambda = 1.0;
    double total_time = 1.0;
    int steps = 1;
    bool flip_momentum = true;

    double dt() const { return total_time / steps; }
    double kinetic_angle() const { return eta * dt(); }
    double potential_angle() const { return lambda * dt(); }
    void validate() const;  // throws ConfigError
};

// Ranges for per-proposal schedule draws. Draws are independent of the
// chain state; all steps within one proposal share the same angles, which
// keeps the proposal distribution exactly symmetric.
struct ScheduleSampler {
    double t_min = 0.5, t_max = 2.5;
    int r_min = 5, r_max = 15;
    double eta_min = 1.0, eta_max = 1.0;
    double lambda_min = 1.0, lambda_max = 1.0;
    bool flip_momentum = true;

    void validate() const;  // throws ConfigError
};

// t ~ U(t_min, t_max), r ~ UInt(r_min, r_max), eta/lambda uniform over their
// (possibly degenerate) ranges. Draw order: t, r, eta, lambda.
TrotterSchedule sample_schedule(const ScheduleSampler& sampler, Rng& rng);

// Energy tabulated over every grid point, so repeated proposals reuse one
// evaluation pass. Construction fails on any non-finite value.
struct GridPotential {
    RegisterSpec spec;
    std::vector<double> values;
};
GridPotential tabulate_energy(const RegisterSpec& spec, const Target& target);

// amplitude_k *= e^{-i*angle*f_k}; diagonal, position probabilities unchanged.
void apply_potential_phase(Statevector& state, const GridPotential& potential, double angle);
void apply_potential_phase(Statevector& state, const Target& target, double angle);

// For each dimension: into the momentum basis, amplitude *= e^{-i*angle*p^2/2},
// back out.
void apply_kinetic_phase(Statevector& state, double angle);

// `steps` repetitions of potential phase then kinetic phase, then the
// momentum flip if the schedule asks for it.
void trotter_evolve(Statevector& state, const GridPotential& potential,
                    const TrotterSchedule& schedule);
void trotter_evolve(Statevector& state, const Target& target,
                    const TrotterSchedule& schedule);

// eta/2 * sum_dims <p_dim^2> + lambda * <f>.
double expectation_hamiltonian(const Statevector& state, const GridPotential& potential,
                               double eta, double lambda);

}  // namespace qdhmc
