#include "qdhmc/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "qdhmc/errors.hpp"

namespace qdhmc {

namespace {
constexpr double kTwoPi = 6.283185307179586477;
// 2^24 amplitudes (256 MiB) is already far past desk scale.
constexpr int kMaxTotalQubits = 24;
}  // namespace

RegisterSpec::RegisterSpec(int d, int n) : qubits_per_dim(d), num_dims(n) {
    if (d < 1 || n < 1)
        throw ConfigError("RegisterSpec: qubits_per_dim and num_dims must be >= 1");
    if (d * n > kMaxTotalQubits)
        throw ConfigError("RegisterSpec: register of " + std::to_string(d * n) +
                          " qubits exceeds the dense statevector cap of " +
                          std::to_string(kMaxTotalQubits));
}

double RegisterSpec::spacing() const {
    return std::sqrt(kTwoPi / static_cast<double>(points_per_dim()));
}

double RegisterSpec::coord_min() const {
    return grid_coord(*this, 0);
}

double RegisterSpec::coord_max() const {
    return grid_coord(*this, static_cast<std::int64_t>(points_per_dim()) - 1);
}

double grid_coord(const RegisterSpec& spec, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(spec.points_per_dim());
    if (k < 0 || k >= n)
        throw std::domain_error("grid_coord: index " + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + ")");
    return spec.spacing() * (static_cast<double>(k) - static_cast<double>(n) / 2.0);
}

std::int64_t nearest_index(const RegisterSpec& spec, double x) {
    const auto n = static_cast<std::int64_t>(spec.points_per_dim());
    // k_real solves x = spacing*(k - N/2); ceil(k_real - 1/2) rounds to
    // nearest with exact midpoints going down.
    const double k_real = x / spec.spacing() + static_cast<double>(n) / 2.0;
    auto k = static_cast<std::int64_t>(std::ceil(k_real - 0.5));
    if (k < 0) k = 0;
    if (k >= n) k = n - 1;
    return k;
}

std::size_t pack_indices(const RegisterSpec& spec, const std::vector<std::int64_t>& indices) {
    if (indices.size() != static_cast<std::size_t>(spec.num_dims))
        throw std::domain_error("pack_indices: expected " + std::to_string(spec.num_dims) +
                                " indices, got " + std::to_string(indices.size()));
    const auto n = static_cast<std::int64_t>(spec.points_per_dim());
    std::size_t flat = 0;
    for (int i = 0; i < spec.num_dims; ++i) {
        const auto k = indices[static_cast<std::size_t>(i)];
        if (k < 0 || k >= n)
            throw std::domain_error("pack_indices: component " + std::to_string(i) +
                                    " out of range");
        flat = (flat << spec.qubits_per_dim) | static_cast<std::size_t>(k);
    }
    return flat;
}

std::vector<std::int64_t> unpack_indices(const RegisterSpec& spec, std::size_t flat) {
    if (flat >= spec.total_points())
        throw std::domain_error("unpack_indices: flat index out of range");
    const std::size_t mask = spec.points_per_dim() - 1;
    std::vector<std::int64_t> indices(static_cast<std::size_t>(spec.num_dims));
    for (int i = spec.num_dims - 1; i >= 0; --i) {
        indices[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(flat & mask);
        flat >>= spec.qubits_per_dim;
    }
    return indices;
}

GridPoint grid_point(const RegisterSpec& spec, const std::vector<std::int64_t>& indices) {
    GridPoint p;
    p.indices = indices;
    p.coords.reserve(indices.size());
    for (auto k : indices) p.coords.push_back(grid_coord(spec, k));
    // pack validates range as a side effect of the loop above
    (void)pack_indices(spec, indices);
    return p;
}

std::vector<double> grid_coords(const RegisterSpec& spec) {
    std::vector<double> xs(spec.points_per_dim());
    for (std::size_t k = 0; k < xs.size(); ++k)
        xs[k] = grid_coord(spec, static_cast<std::int64_t>(k));
    return xs;
}

}  // namespace qdhmc
