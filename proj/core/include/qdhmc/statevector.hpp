#pragma once

#include <complex>
#include <vector>

#include "qdhmc/grid.hpp"
#include "qdhmc/rng.hpp"

namespace qdhmc {

using cdouble = std::complex<double>;

// Dense amplitude vector over the full multi-register basis.
// Public operations keep the norm at 1 within 1e-12.
class Statevector {
public:
    explicit Statevector(const RegisterSpec& spec);  // |0...0>

    static Statevector basis_state(const RegisterSpec& spec,
                                   const std::vector<std::int64_t>& indices);
    static Statevector basis_state(const RegisterSpec& spec, std::size_t flat);

    const RegisterSpec& spec() const { return spec_; }
    std::size_t size() const { return amps_.size(); }

    cdouble& operator[](std::size_t i) { return amps_[i]; }
    const cdouble& operator[](std::size_t i) const { return amps_[i]; }
    std::vector<cdouble>& amplitudes() { return amps_; }
    const std::vector<cdouble>& amplitudes() const { return amps_; }

    double norm() const;
    void normalize();

    // |a_k|^2 over the flat basis.
    std::vector<double> probabilities() const;

    // One projective measurement outcome, state untouched; inverse-CDF
    // sampling on a single uniform draw. Throws if the norm is off by
    // more than 1e-6.
    std::vector<std::int64_t> sample_measurement(Rng& rng) const;
    std::size_t sample_measurement_flat(Rng& rng) const;

    // Sum_k |a_k|^2 * x_{k_dim}.
    double expectation_position(int dim) const;
    // Same after transforming `dim` to the momentum basis (on a copy).
    double expectation_momentum(int dim) const;
    // Sum_k |a_k|^2 * values[k] for any grid-diagonal observable.
    double expectation_diagonal(const std::vector<double>& values) const;

private:
    RegisterSpec spec_;
    std::vector<cdouble> amps_;
};

}  // namespace qdhmc
