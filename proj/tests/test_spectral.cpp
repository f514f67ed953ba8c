#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qdhmc/grid.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/spectral.hpp"
#include "qdhmc/statevector.hpp"

using namespace qdhmc;
using cdouble = std::complex<double>;

namespace {

Statevector random_state(const RegisterSpec& spec, std::uint64_t seed) {
    Statevector state(spec);
    Rng rng(seed);
    for (auto& a : state.amplitudes()) a = {standard_normal(rng), standard_normal(rng)};
    state.normalize();
    return state;
}

double max_diff(const Statevector& a, const Statevector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<double> momentum_probabilities(const Statevector& state, int dim) {
    Statevector copy = state;
    to_momentum_basis(copy, dim);
    return copy.probabilities();
}

}  // namespace

TEST_CASE("the centered transform of a basis state has uniform moduli") {
    RegisterSpec spec(3, 1);
    for (std::size_t k : {std::size_t{0}, std::size_t{5}}) {
        auto state = Statevector::basis_state(spec, k);
        centered_fourier(state, 0, TransformDirection::forward);
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(std::abs(state[j]) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
    }
}

TEST_CASE("transform matrix elements are e^{i x p} / sqrt(N)") {
    RegisterSpec spec(3, 1);
    for (std::size_t k = 0; k < 8; ++k) {
        auto state = Statevector::basis_state(spec, k);
        centered_fourier(state, 0, TransformDirection::forward);
        const double p = grid_coord(spec, static_cast<std::int64_t>(k));
        for (std::size_t j = 0; j < 8; ++j) {
            const double x = grid_coord(spec, static_cast<std::int64_t>(j));
            const cdouble expected = std::polar(1.0 / std::sqrt(8.0), x * p);
            CHECK(std::abs(state[j] - expected) <= 1e-12);
        }
    }
}

TEST_CASE("forward then inverse transform is the identity") {
    RegisterSpec spec(4, 2);
    const auto original = random_state(spec, 42);
    auto state = original;
    for (int dim = 0; dim < 2; ++dim) {
        centered_fourier(state, dim, TransformDirection::forward);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
        centered_fourier(state, dim, TransformDirection::inverse);
        CHECK(max_diff(state, original) <= 1e-12);
    }
}

TEST_CASE("momentum basis round trip preserves the state") {
    RegisterSpec spec(5, 1);
    const auto original = random_state(spec, 7);
    auto state = original;
    to_momentum_basis(state, 0);
    from_momentum_basis(state, 0);
    CHECK(max_diff(state, original) <= 1e-12);
}

TEST_CASE("momentum_flip is self-inverse") {
    RegisterSpec spec(3, 2);
    const auto original = random_state(spec, 11);
    auto state = original;
    momentum_flip(state);
    momentum_flip(state);
    CHECK(max_diff(state, original) <= 1e-12);
}

TEST_CASE("momentum_flip acts as the parity mask in the position basis") {
    for (int d : {2, 3, 4}) {
        RegisterSpec spec(d, 1);
        const auto original = random_state(spec, 100 + static_cast<std::uint64_t>(d));
        auto state = original;
        momentum_flip(state);
        for (std::size_t k = 0; k < state.size(); ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(state[k] - sign * original[k]) <= 1e-12);
        }
    }
}

TEST_CASE("multi-dimensional momentum_flip multiplies per-dimension parities") {
    RegisterSpec spec(2, 2);
    const auto original = random_state(spec, 21);
    auto state = original;
    momentum_flip(state);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto idx = unpack_indices(spec, flat);
        const double sign = ((idx[0] + idx[1]) % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(state[flat] - sign * original[flat]) <= 1e-12);
    }
}

TEST_CASE("momentum_flip leaves position probabilities untouched") {
    RegisterSpec spec(4, 1);
    const auto original = random_state(spec, 31);
    auto state = original;
    momentum_flip(state);
    const auto p0 = original.probabilities();
    const auto p1 = state.probabilities();
    for (std::size_t k = 0; k < p0.size(); ++k)
        CHECK(p1[k] == doctest::Approx(p0[k]).epsilon(1e-12));
}

TEST_CASE("momentum_flip shifts the momentum distribution by half the band") {
    RegisterSpec spec(5, 1);
    const auto original = random_state(spec, 77);
    auto state = original;
    momentum_flip(state);
    const auto q0 = momentum_probabilities(original, 0);
    const auto q1 = momentum_probabilities(state, 0);
    const std::size_t half = 16;
    for (std::size_t m = 0; m < q0.size(); ++m)
        CHECK(q1[m] == doctest::Approx(q0[m ^ half]).epsilon(1e-10));
}
