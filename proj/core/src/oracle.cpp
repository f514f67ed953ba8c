#include "qdhmc/oracle.hpp"

#include <cmath>
#include <complex>

#include "qdhmc/errors.hpp"

namespace qdhmc {

namespace {

constexpr double kTwoPi = 6.283185307179586477;

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Lift a one-dimension operator onto the axis `dim` of the full register.
DenseMatrix on_axis(const RegisterSpec& spec, int dim, const DenseMatrix& op) {
    const auto n = static_cast<Eigen::Index>(spec.points_per_dim());
    const Eigen::Index left = static_cast<Eigen::Index>(1)
                              << (spec.qubits_per_dim * dim);
    const Eigen::Index right = static_cast<Eigen::Index>(1)
                               << (spec.qubits_per_dim * (spec.num_dims - 1 - dim));
    (void)n;
    return kron(kron(DenseMatrix::Identity(left, left), op),
                DenseMatrix::Identity(right, right));
}

// Length-N DFT with kernel e^{+2*pi*i*j*k/N}/sqrt(N).
DenseMatrix dft_plus(std::size_t n) {
    DenseMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                std::polar(scale, kTwoPi * static_cast<double>(j * k % n) /
                                      static_cast<double>(n));
    return f;
}

// X on the register's most significant bit: permutation k -> k xor N/2.
DenseMatrix msb_flip(std::size_t n) {
    DenseMatrix x = DenseMatrix::Zero(static_cast<Eigen::Index>(n),
                                      static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k)
        x(static_cast<Eigen::Index>(k ^ (n / 2)), static_cast<Eigen::Index>(k)) = 1.0;
    return x;
}

DenseMatrix centered_fourier_1d(const RegisterSpec& spec) {
    const auto x0 = msb_flip(spec.points_per_dim());
    return x0 * dft_plus(spec.points_per_dim()) * x0;
}

void check_dim(const RegisterSpec& spec, int dim) {
    if (dim < 0 || dim >= spec.num_dims)
        throw std::domain_error("oracle: dim out of range");
}

}  // namespace

void check_size_guard(const RegisterSpec& spec) {
    if (spec.total_qubits() > 12)
        throw SizeGuardError("oracle: refusing explicit matrices above 12 qubits (got " +
                             std::to_string(spec.total_qubits()) + ")");
}

DenseMatrix dense_position(const RegisterSpec& spec, int dim) {
    check_size_guard(spec);
    check_dim(spec, dim);
    const auto total = static_cast<Eigen::Index>(spec.total_points());
    const int shift = spec.qubits_per_dim * (spec.num_dims - 1 - dim);
    const std::size_t mask = spec.points_per_dim() - 1;
    DenseMatrix x = DenseMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i) {
        const auto k = static_cast<std::int64_t>(
            (static_cast<std::size_t>(i) >> shift) & mask);
        x(i, i) = grid_coord(spec, k);
    }
    return x;
}

DenseMatrix dense_momentum(const RegisterSpec& spec, int dim) {
    const auto fc = dense_centered_fourier(spec, dim).matrix;
    return fc * dense_position(spec, dim) * fc.adjoint();
}

DenseUnitary dense_centered_fourier(const RegisterSpec& spec, int dim) {
    check_size_guard(spec);
    check_dim(spec, dim);
    return {on_axis(spec, dim, centered_fourier_1d(spec)),
            "X_msb * DFT(+) * X_msb on axis " + std::to_string(dim)};
}

DenseUnitary dense_momentum_flip(const RegisterSpec& spec) {
    check_size_guard(spec);
    const auto total = static_cast<Eigen::Index>(spec.total_points());
    DenseMatrix m = DenseMatrix::Identity(total, total);
    const auto fc1 = centered_fourier_1d(spec);
    const auto x1 = msb_flip(spec.points_per_dim());
    for (int dim = 0; dim < spec.num_dims; ++dim) {
        const auto fc = on_axis(spec, dim, fc1);
        const auto x = on_axis(spec, dim, x1);
        m = fc.adjoint() * x * fc * m;
    }
    return {std::move(m), "product over axes of Fc^dagger X_msb Fc"};
}

DenseUnitary dense_trotter_unitary(const RegisterSpec& spec, const Target& target,
                                   const TrotterSchedule& schedule) {
    check_size_guard(spec);
    schedule.validate();
    const auto total = static_cast<Eigen::Index>(spec.total_points());
    const auto potential = tabulate_energy(spec, target);

    DenseMatrix v = DenseMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i)
        v(i, i) = std::polar(1.0, -schedule.potential_angle() *
                                      potential.values[static_cast<std::size_t>(i)]);

    DenseMatrix kinetic = DenseMatrix::Identity(total, total);
    const auto fc1 = centered_fourier_1d(spec);
    for (int dim = 0; dim < spec.num_dims; ++dim) {
        const auto n = spec.points_per_dim();
        DenseMatrix d = DenseMatrix::Zero(static_cast<Eigen::Index>(n),
                                          static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k) {
            const double p = grid_coord(spec, static_cast<std::int64_t>(k));
            d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) =
                std::polar(1.0, -schedule.kinetic_angle() * p * p / 2.0);
        }
        const auto fc = on_axis(spec, dim, fc1);
        kinetic = fc * on_axis(spec, dim, d) * fc.adjoint() * kinetic;
    }

    DenseMatrix u = DenseMatrix::Identity(total, total);
    for (int step = 0; step < schedule.steps; ++step) u = kinetic * v * u;
    if (schedule.flip_momentum) u = dense_momentum_flip(spec).matrix * u;
    return {std::move(u), "explicit per-step product"};
}

Eigen::MatrixXd exact_proposal_matrix(const RegisterSpec& spec, const Target& target,
                                      const TrotterSchedule& schedule) {
    return dense_trotter_unitary(spec, target, schedule).matrix.cwiseAbs2();
}

std::vector<double> exact_grid_boltzmann(const RegisterSpec& spec, const Target& target) {
    check_size_guard(spec);
    const auto potential = tabulate_energy(spec, target);
    // energy already folds 1/T; p_k proportional to e^{-f_k}
    double fmin = potential.values[0];
    for (double f : potential.values) fmin = std::min(fmin, f);
    std::vector<double> p(potential.values.size());
    double z = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::exp(-(potential.values[i] - fmin));
        z += p[i];
    }
    for (auto& v : p) v /= z;
    return p;
}

double unitarity_residual(const DenseMatrix& u) {
    const DenseMatrix g = u.adjoint() * u;
    return (g - DenseMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qdhmc
