#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qdhmc {

// Qubit register layout for an n-dimensional position grid.
// Each dimension gets d qubits = N = 2^d grid points with spacing
// sqrt(2*pi/N); point k sits at x_k = sqrt(2*pi/N) * (k - N/2).
// Basis index convention: qubit 0 is the most significant bit of a
// dimension's index; dimension 0 occupies the most significant digit
// block of the flat index.
struct RegisterSpec {
    int qubits_per_dim = 1;
    int num_dims = 1;

    RegisterSpec() = default;
    RegisterSpec(int d, int n);  // validates; throws ConfigError

    int total_qubits() const { return qubits_per_dim * num_dims; }
    std::size_t points_per_dim() const { return std::size_t{1} << qubits_per_dim; }
    std::size_t total_points() const { return std::size_t{1} << total_qubits(); }

    double spacing() const;          // sqrt(2*pi/N)
    double coord_min() const;        // x_0
    double coord_max() const;        // x_{N-1}
};

// One grid point, both as per-dimension indices and as coordinates.
struct GridPoint {
    std::vector<std::int64_t> indices;
    std::vector<double> coords;
};

// x_k = sqrt(2*pi/N) * (k - N/2). Throws std::domain_error for k outside [0, N).
double grid_coord(const RegisterSpec& spec, std::int64_t k);

// Closest grid index to x, clamped to [0, N-1]; ties go to the smaller index.
std::int64_t nearest_index(const RegisterSpec& spec, double x);

// Flat basis index <-> per-dimension indices (dimension 0 most significant).
std::size_t pack_indices(const RegisterSpec& spec, const std::vector<std::int64_t>& indices);
std::vector<std::int64_t> unpack_indices(const RegisterSpec& spec, std::size_t flat);

GridPoint grid_point(const RegisterSpec& spec, const std::vector<std::int64_t>& indices);

// All N coordinates of one dimension, ascending.
std::vector<double> grid_coords(const RegisterSpec& spec);

}  // namespace qdhmc
