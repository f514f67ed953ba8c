#pragma once

#include <Eigen/Dense>
#include <string>

#include "qdhmc/dynamics.hpp"
#include "qdhmc/grid.hpp"
#include "qdhmc/targets.hpp"

namespace qdhmc {

// Brute-force dense constructions, built from first principles (explicit
// DFT matrices, explicit bit-flip permutations, explicit matrix products).
// They exist to cross-validate the matrix-free implementations, so they
// deliberately share no code with them.

using DenseMatrix = Eigen::MatrixXcd;

struct DenseUnitary {
    DenseMatrix matrix;
    std::string construction;
};

// Explicit matrices refuse registers above 12 total qubits.
void check_size_guard(const RegisterSpec& spec);

// Diagonal coordinate operator of one dimension over the full register space.
DenseMatrix dense_position(const RegisterSpec& spec, int dim = 0);
// Conjugated position: Fc x Fc^dagger.
DenseMatrix dense_momentum(const RegisterSpec& spec, int dim = 0);
// Gate-level centered transform: bit-flip permutation, DFT matrix with
// kernel e^{+2*pi*i*j*k/N}/sqrt(N), bit-flip permutation.
DenseUnitary dense_centered_fourier(const RegisterSpec& spec, int dim = 0);
// Product over dimensions of Fc^dagger X_msb Fc.
DenseUnitary dense_momentum_flip(const RegisterSpec& spec);
// Explicit product of per-step factors, mirroring trotter_evolve.
DenseUnitary dense_trotter_unitary(const RegisterSpec& spec, const Target& target,
                                   const TrotterSchedule& schedule);

// P(y, x) = |U(y, x)|^2; columns sum to 1.
Eigen::MatrixXd exact_proposal_matrix(const RegisterSpec& spec, const Target& target,
                                      const TrotterSchedule& schedule);

// Normalized e^{log_prob(x_k)/T} over all grid points (max-subtracted
// before exponentiation).
std::vector<double> exact_grid_boltzmann(const RegisterSpec& spec, const Target& target);

// max |(U^dagger U - I)_{jk}|.
double unitarity_residual(const DenseMatrix& u);

}  // namespace qdhmc
