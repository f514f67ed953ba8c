#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qdhmc/errors.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/targets.hpp"

using namespace qdhmc;

namespace {

// Central difference of log_prob along each axis.
std::vector<double> fd_gradient(const Target& t, std::vector<double> x, double h = 1e-5) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double orig = x[i];
        x[i] = orig + h;
        const double hi = t.log_prob(x);
        x[i] = orig - h;
        const double lo = t.log_prob(x);
        x[i] = orig;
        g[i] = (hi - lo) / (2.0 * h);
    }
    return g;
}

}  // namespace

TEST_CASE("log-density formulas match hand-computed values") {
    CHECK(make_gaussian(2).log_prob({0.5, -1.0}) == doctest::Approx(-0.75).epsilon(1e-13));
    CHECK(make_gaussian_centered(1).log_prob({1.5}) == doctest::Approx(-2.25).epsilon(1e-13));
    CHECK(make_rosenbrock(3).log_prob({0.5, 1.0, 2.0}) ==
          doctest::Approx(-12.75).epsilon(1e-13));
    CHECK(make_double_well().log_prob({1.2, -0.3}) == doctest::Approx(2.9964).epsilon(1e-12));
    CHECK(make_double_well_1d().log_prob({1.2}) == doctest::Approx(3.0864).epsilon(1e-12));
    CHECK(make_styblinski_tang(1).log_prob({2.0}) ==
          doctest::Approx(-0.5 * (16.0 - 64.0 + 10.0)).epsilon(1e-13));
}

TEST_CASE("gradients agree with central finite differences") {
    const std::vector<Target> targets{make_gaussian(3),    make_gaussian_centered(2),
                                      make_rosenbrock(3),  make_double_well(),
                                      make_double_well_1d(), make_styblinski_tang(2)};
    Rng rng(2024);
    for (const auto& t : targets) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> x(static_cast<std::size_t>(t.dim));
            for (auto& v : x) v = uniform_real(rng, -3.0, 3.0);
            const auto g = t.grad_log_prob(x);
            const auto fd = fd_gradient(t, x);
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(g[i] == doctest::Approx(fd[i]).epsilon(1e-5));
        }
    }
}

TEST_CASE("energy is the negated log-density over temperature") {
    const auto t = make_double_well_1d(0.25);
    const std::vector<double> x{0.8};
    CHECK(t.energy(x) == doctest::Approx(-t.log_prob(x) / 0.25).epsilon(1e-14));
    const auto g = t.grad_log_prob(x);
    const auto ge = t.grad_energy(x);
    CHECK(ge[0] == doctest::Approx(-g[0] / 0.25).epsilon(1e-14));
}

TEST_CASE("with_temperature rescales energies exactly") {
    const auto base = make_gaussian(2);
    const auto hot = base.with_temperature(4.0);
    const std::vector<double> x{0.3, -0.9};
    CHECK(hot.temperature == 4.0);
    CHECK(hot.energy(x) == doctest::Approx(base.energy(x) / 4.0).epsilon(1e-14));
}

TEST_CASE("the shifted Gaussian peaks at -1/2 per coordinate") {
    const auto t = make_gaussian(2);
    const auto g = t.grad_log_prob({-0.5, -0.5});
    CHECK(g[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(g[1] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(t.log_prob({-0.5, -0.5}) > t.log_prob({-0.4, -0.5}));
}

TEST_CASE("the quartic sum target attains its known minimum energy") {
    const double xstar = -2.903534;
    const auto t = make_styblinski_tang(2);
    CHECK(t.energy({xstar, xstar}) == doctest::Approx(2.0 * -39.16599).epsilon(1e-4));
    for (double g : t.grad_energy({xstar, xstar})) CHECK(std::abs(g) <= 1e-3);
}

TEST_CASE("the registry resolves every advertised name") {
    const auto names = target_names();
    CHECK(names.size() == 6);
    for (const auto& name : names) {
        const int n = (name == "double_well") ? 2 : (name == "double_well_1d") ? 1
                                                : (name == "rosenbrock")       ? 2
                                                                               : 1;
        const auto t = make_target(name, n, 1.3);
        CHECK(t.name == name);
        CHECK(t.dim == n);
        CHECK(std::isfinite(t.log_prob(std::vector<double>(static_cast<std::size_t>(n), 0.5))));
    }
}

TEST_CASE("the registry rejects unknown names and impossible shapes") {
    CHECK_THROWS_AS(make_target("nonsense", 1), ConfigError);
    CHECK_THROWS_AS(make_target("rosenbrock", 1), ConfigError);
    CHECK_THROWS_AS(make_target("double_well", 3), ConfigError);
    CHECK_THROWS_AS(make_target("double_well_1d", 2), ConfigError);
    CHECK_THROWS_AS(make_target("gaussian", 0), ConfigError);
    CHECK_THROWS_AS(make_target("gaussian", 1, 0.0), ConfigError);
    CHECK_THROWS_AS(make_target("gaussian", 1, -1.0), ConfigError);
}

TEST_CASE("energy and gradient validate their inputs") {
    const auto t = make_gaussian(2);
    CHECK_THROWS_AS(t.energy({1.0}), std::domain_error);
    CHECK_THROWS_AS(t.grad_energy({1.0, 2.0, 3.0}), std::domain_error);
    CHECK_THROWS_AS(t.energy({1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::domain_error);
}
