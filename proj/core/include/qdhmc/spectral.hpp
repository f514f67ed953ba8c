#pragma once

#include "qdhmc/statevector.hpp"

namespace qdhmc {

enum class TransformDirection { forward, inverse };

// Centered Fourier transform of one dimension's register: a half-band
// index shift, a length-N transform with kernel e^{+2*pi*i*j*k/N}/sqrt(N)
// (conjugated kernel for the inverse), and another half-band shift.
// Aligns the frequency grid with the signed position grid, so the
// momentum operator is the conjugated position operator and momentum
// eigenvalues equal the grid coordinates.
void centered_fourier(Statevector& state, int dim, TransformDirection direction);

// Momentum-basis coefficients are <m|Fc^dagger|psi>; a diagonal function
// of momentum is applied as a diagonal function of the grid coordinate
// between these two calls.
void to_momentum_basis(Statevector& state, int dim);
void from_momentum_basis(Statevector& state, int dim);

// For every dimension: transform to momentum space, flip the register's
// most significant bit, transform back. Unitary and self-inverse.
// In the position basis this is the parity mask diag((-1)^k) for d >= 2,
// so position probabilities are untouched while the momentum distribution
// shifts by half the band.
void momentum_flip(Statevector& state);

}  // namespace qdhmc
