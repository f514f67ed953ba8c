#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdhmc/diagnostics.hpp"
#include "qdhmc/errors.hpp"
#include "qdhmc/rng.hpp"

using namespace qdhmc;

namespace {

std::vector<double> white_noise(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = standard_normal(rng);
    return v;
}

// x_{t+1} = phi x_t + z_t has autocorrelation phi^t.
std::vector<double> ar1(std::size_t n, double phi, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    double x = 0.0;
    for (std::size_t i = 0; i < n + 1000; ++i) {
        x = phi * x + standard_normal(rng);
        if (i >= 1000) v[i - 1000] = x;
    }
    return v;
}

ChainResult chain_with_acceptance(const std::vector<std::uint8_t>& accepted) {
    ChainResult c;
    c.dim = 1;
    c.accepted = accepted;
    c.energies.assign(accepted.size(), 0.0);
    c.points.assign(accepted.size(), 0.0);
    return c;
}

}  // namespace

TEST_CASE("white noise has the iid autocorrelation time") {
    const auto est = autocorrelation_time(white_noise(20000, 11));
    CHECK(est.tau >= 0.5);
    CHECK(est.tau <= 0.6);
    CHECK(est.rho[0] == 1.0);
    CHECK(est.window <= 10);
}

TEST_CASE("an order-one autoregression has tau = 1/2 + phi/(1-phi)") {
    const auto est = autocorrelation_time(ar1(100000, 0.5, 19));
    CHECK(est.tau == doctest::Approx(1.5).epsilon(0.07));
}

TEST_CASE("stronger correlation gives longer autocorrelation times") {
    const double t_white = autocorrelation_time(white_noise(50000, 3)).tau;
    const double t_half = autocorrelation_time(ar1(50000, 0.5, 3)).tau;
    const double t_strong = autocorrelation_time(ar1(50000, 0.8, 3)).tau;
    CHECK(t_white < t_half);
    CHECK(t_half < t_strong);
    // tau(0.8) = 4.5 in closed form
    CHECK(t_strong == doctest::Approx(4.5).epsilon(0.15));
}

TEST_CASE("estimator inputs are validated") {
    CHECK_THROWS_AS(autocorrelation_time(std::vector<double>(9, 1.0)), InsufficientDataError);
    CHECK_THROWS_AS(autocorrelation_time(std::vector<double>(100, 3.3)), ZeroVarianceError);
}

TEST_CASE("effective sample size approaches N for independent samples") {
    const auto series = white_noise(10000, 29);
    const double ess = effective_sample_size(series);
    CHECK(ess <= 10000.0);
    CHECK(ess >= 8000.0);
}

TEST_CASE("effective sample size shrinks with correlation") {
    const auto series = ar1(50000, 0.8, 31);
    // tau = 4.5 so ESS should be near N / 9
    CHECK(effective_sample_size(series) == doctest::Approx(50000.0 / 9.0).epsilon(0.2));
}

TEST_CASE("acceptance_curve averages repetition rates per temperature") {
    std::vector<std::pair<double, std::vector<ChainResult>>> grouped;
    grouped.push_back({1.0,
                       {chain_with_acceptance({1, 1, 0, 0}),
                        chain_with_acceptance({1, 0, 0, 0})}});
    grouped.push_back({0.5, {chain_with_acceptance({1, 1, 1, 0})}});
    const auto curve = acceptance_curve(grouped);
    REQUIRE(curve.size() == 2);
    CHECK(curve[0].temperature == 1.0);
    CHECK(curve[0].mean == doctest::Approx(0.375).epsilon(1e-13));
    CHECK(curve[0].stddev == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(curve[0].repetitions == 2);
    CHECK(curve[1].mean == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(curve[1].stddev == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("acceptance_curve skips empty groups") {
    std::vector<std::pair<double, std::vector<ChainResult>>> grouped;
    grouped.push_back({2.0, {}});
    grouped.push_back({1.0, {chain_with_acceptance({1, 0})}});
    const auto curve = acceptance_curve(grouped);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].temperature == 1.0);
}
