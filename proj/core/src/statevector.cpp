#include "qdhmc/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "qdhmc/errors.hpp"
#include "qdhmc/spectral.hpp"

namespace qdhmc {

Statevector::Statevector(const RegisterSpec& spec)
    : spec_(spec), amps_(spec.total_points(), cdouble{0.0, 0.0}) {
    amps_[0] = 1.0;
}

Statevector Statevector::basis_state(const RegisterSpec& spec,
                                     const std::vector<std::int64_t>& indices) {
    return basis_state(spec, pack_indices(spec, indices));
}

Statevector Statevector::basis_state(const RegisterSpec& spec, std::size_t flat) {
    if (flat >= spec.total_points())
        throw std::domain_error("basis_state: flat index out of range");
    Statevector s(spec);
    s.amps_[0] = 0.0;
    s.amps_[flat] = 1.0;
    return s;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void Statevector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("normalize: zero state");
    for (auto& a : amps_) a /= n;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

std::size_t Statevector::sample_measurement_flat(Rng& rng) const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    if (std::abs(total - 1.0) > 1e-6)
        throw std::runtime_error("sample_measurement: state norm deviates from 1 by more than 1e-6");
    const double u = uniform01(rng) * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        cum += std::norm(amps_[i]);
        if (u < cum) return i;
    }
    return amps_.size() - 1;  // u landed in the rounding tail
}

std::vector<std::int64_t> Statevector::sample_measurement(Rng& rng) const {
    return unpack_indices(spec_, sample_measurement_flat(rng));
}

double Statevector::expectation_position(int dim) const {
    if (dim < 0 || dim >= spec_.num_dims)
        throw std::domain_error("expectation_position: dim out of range");
    const auto xs = grid_coords(spec_);
    const int shift = spec_.qubits_per_dim * (spec_.num_dims - 1 - dim);
    const std::size_t mask = spec_.points_per_dim() - 1;
    double e = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        e += std::norm(amps_[i]) * xs[(i >> shift) & mask];
    return e;
}

double Statevector::expectation_momentum(int dim) const {
    Statevector copy = *this;
    to_momentum_basis(copy, dim);
    return copy.expectation_position(dim);
}

double Statevector::expectation_diagonal(const std::vector<double>& values) const {
    if (values.size() != amps_.size())
        throw std::domain_error("expectation_diagonal: size mismatch");
    double e = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) e += std::norm(amps_[i]) * values[i];
    return e;
}

}  // namespace qdhmc
