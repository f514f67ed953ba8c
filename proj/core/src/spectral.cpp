#include "qdhmc/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace qdhmc {

namespace {

constexpr double kTwoPi = 6.283185307179586477;

// e^{+2*pi*i*j/n} for j < n/2, rebuilt once per length per thread.
const std::vector<cdouble>& unit_roots(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<cdouble>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<cdouble> r(n / 2);
        for (std::size_t j = 0; j < n / 2; ++j)
            r[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(n));
        it = cache.emplace(n, std::move(r)).first;
    }
    return it->second;
}

// In-place radix-2 transform, kernel e^{+-2*pi*i*j*k/n}/sqrt(n); n a power of two.
void fft_unitary(cdouble* a, std::size_t n, bool plus_kernel) {
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& roots = unit_roots(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                cdouble w = roots[k * step];
                if (!plus_kernel) w = std::conj(w);
                const cdouble u = a[i + k];
                const cdouble v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) a[i] *= scale;
}

struct AxisLayout {
    std::size_t n;       // points along the axis
    std::size_t half;    // n/2
    std::size_t stride;  // flat-index stride of the axis
    std::size_t block;   // stride * n
    std::size_t total;
};

AxisLayout axis_layout(const RegisterSpec& spec, int dim) {
    if (dim < 0 || dim >= spec.num_dims)
        throw std::domain_error("spectral: dim out of range");
    AxisLayout l;
    l.n = spec.points_per_dim();
    l.half = l.n / 2;
    l.stride = std::size_t{1} << (spec.qubits_per_dim * (spec.num_dims - 1 - dim));
    l.block = l.stride * l.n;
    l.total = spec.total_points();
    return l;
}

// XOR the axis index with n/2, i.e. X on the register's most significant bit.
void flip_axis_msb(Statevector& state, int dim) {
    const auto l = axis_layout(state.spec(), dim);
    const std::size_t bit = l.half * l.stride;
    auto& amps = state.amplitudes();
    for (std::size_t i = 0; i < l.total; ++i) {
        const std::size_t j = i ^ bit;
        if (i < j) std::swap(amps[i], amps[j]);
    }
}

}  // namespace

void centered_fourier(Statevector& state, int dim, TransformDirection direction) {
    const auto l = axis_layout(state.spec(), dim);
    const bool plus = direction == TransformDirection::forward;
    auto& amps = state.amplitudes();
    std::vector<cdouble> line(l.n);
    for (std::size_t outer = 0; outer < l.total; outer += l.block) {
        for (std::size_t inner = 0; inner < l.stride; ++inner) {
            const std::size_t base = outer + inner;
            // both half-band shifts are folded into the gather/scatter maps
            for (std::size_t k = 0; k < l.n; ++k)
                line[k ^ l.half] = amps[base + k * l.stride];
            fft_unitary(line.data(), l.n, plus);
            for (std::size_t k = 0; k < l.n; ++k)
                amps[base + (k ^ l.half) * l.stride] = line[k];
        }
    }
}

void to_momentum_basis(Statevector& state, int dim) {
    centered_fourier(state, dim, TransformDirection::inverse);
}

void from_momentum_basis(Statevector& state, int dim) {
    centered_fourier(state, dim, TransformDirection::forward);
}

void momentum_flip(Statevector& state) {
    for (int dim = 0; dim < state.spec().num_dims; ++dim) {
        to_momentum_basis(state, dim);
        flip_axis_msb(state, dim);
        from_momentum_basis(state, dim);
    }
}

}  // namespace qdhmc
