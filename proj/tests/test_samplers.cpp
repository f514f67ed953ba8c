#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "qdhmc/dynamics.hpp"
#include "qdhmc/errors.hpp"
#include "qdhmc/grid.hpp"
#include "qdhmc/oracle.hpp"
#include "qdhmc/rng.hpp"
#include "qdhmc/samplers.hpp"
#include "qdhmc/targets.hpp"

using namespace qdhmc;

namespace {

Target unit_gaussian() {
    Target t;
    t.name = "unit_gaussian";
    t.dim = 1;
    t.log_prob = [](const std::vector<double>& x) { return -0.5 * x[0] * x[0]; };
    t.grad_log_prob = [](const std::vector<double>& x) { return std::vector<double>{-x[0]}; };
    return t;
}

Target flat_density(int n) {
    Target t;
    t.name = "flat";
    t.dim = n;
    t.log_prob = [](const std::vector<double>&) { return 0.0; };
    t.grad_log_prob = [](const std::vector<double>& x) {
        return std::vector<double>(x.size(), 0.0);
    };
    return t;
}

}  // namespace

TEST_CASE("equal or downhill energies always accept, without consuming randomness") {
    Rng rng(3);
    Rng untouched(3);
    CHECK(metropolis_accept(1.7, 1.7, rng));
    CHECK(metropolis_accept(5.0, -2.0, rng));
    CHECK(rng() == untouched());
}

TEST_CASE("an uphill gap of ln 2 accepts half the time") {
    Rng rng(17);
    const int n = 100000;
    int accepted = 0;
    for (int i = 0; i < n; ++i)
        if (metropolis_accept(0.0, std::log(2.0), rng)) ++accepted;
    CHECK(static_cast<double>(accepted) / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("huge uphill gaps reject without overflowing") {
    Rng rng(5);
    CHECK_FALSE(metropolis_accept(0.0, 1e6, rng));
    CHECK(metropolis_accept(1e6, 0.0, rng));
}

TEST_CASE("non-finite energies reject") {
    Rng rng(4);
    CHECK_FALSE(metropolis_accept(0.0, std::numeric_limits<double>::quiet_NaN(), rng));
    CHECK_FALSE(metropolis_accept(std::numeric_limits<double>::infinity(), 0.0, rng));
}

TEST_CASE("one leapfrog step on the unit Gaussian is the exact shear matrix") {
    const auto t = unit_gaussian();
    const double eps = 0.3;
    const double x0 = 0.7, p0 = -0.4;
    const auto z = leapfrog({x0}, {p0}, t, eps, 1, {});
    const double a = 1.0 - eps * eps / 2.0;
    const double c = -eps + eps * eps * eps / 4.0;
    CHECK(z.position[0] == doctest::Approx(a * x0 + eps * p0).epsilon(1e-12));
    CHECK(z.momentum[0] == doctest::Approx(c * x0 + a * p0).epsilon(1e-12));
}

TEST_CASE("a flat density gives free-particle drift") {
    const auto t = flat_density(2);
    const auto z = leapfrog({1.0, -2.0}, {0.5, 0.25}, t, 0.2, 7, {});
    CHECK(z.position[0] == doctest::Approx(1.0 + 7 * 0.2 * 0.5).epsilon(1e-12));
    CHECK(z.position[1] == doctest::Approx(-2.0 + 7 * 0.2 * 0.25).epsilon(1e-12));
    CHECK(z.momentum[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(z.momentum[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("mass rescales the drift velocity") {
    const auto t = flat_density(1);
    const auto z = leapfrog({0.0}, {1.0}, t, 0.5, 4, {4.0});
    CHECK(z.position[0] == doctest::Approx(4 * 0.5 * 1.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("leapfrog runs backward to the starting point") {
    const auto t = make_double_well_1d();
    const auto fwd = leapfrog({0.37}, {-1.2}, t, 0.1, 25, {});
    const auto back = leapfrog(fwd.position, {-fwd.momentum[0]}, t, 0.1, 25, {});
    CHECK(back.position[0] == doctest::Approx(0.37).epsilon(1e-10));
    CHECK(back.momentum[0] == doctest::Approx(1.2).epsilon(1e-10));
}

TEST_CASE("leapfrog reports divergent trajectories") {
    Target quartic;
    quartic.name = "quartic";
    quartic.dim = 1;
    quartic.log_prob = [](const std::vector<double>& x) {
        return -x[0] * x[0] * x[0] * x[0];
    };
    quartic.grad_log_prob = [](const std::vector<double>& x) {
        return std::vector<double>{-4.0 * x[0] * x[0] * x[0]};
    };
    CHECK_THROWS_AS(leapfrog({3.0}, {0.0}, quartic, 10.0, 50, {}), DivergenceError);
}

TEST_CASE("chains on a round Gaussian reproduce its mean and variance") {
    const auto t = make_gaussian_centered(1);  // variance 1/2
    HmcParams params;
    params.step_size = 0.3;
    params.leapfrog_steps = 10;
    Rng rng(2718);
    const auto chain = run_hmc(t, params, 20000, rng, {0.0});
    REQUIRE(chain.steps() == 20000);
    double mean = 0.0;
    for (std::size_t i = 0; i < chain.steps(); ++i) mean += chain.points[i];
    mean /= static_cast<double>(chain.steps());
    double var = 0.0;
    for (std::size_t i = 0; i < chain.steps(); ++i) {
        const double d = chain.points[i] - mean;
        var += d * d;
    }
    var /= static_cast<double>(chain.steps());
    CHECK(mean == doctest::Approx(0.0).epsilon(0.03));
    CHECK(var == doctest::Approx(0.5).epsilon(0.1));
    CHECK(chain.acceptance_rate() > 0.9);
}

TEST_CASE("run_hmc validates its inputs") {
    const auto t = make_gaussian(2);
    HmcParams params;
    Rng rng(1);
    CHECK_THROWS_AS(run_hmc(t, params, 10, rng, {0.0}), ConfigError);
    params.step_size = -1.0;
    CHECK_THROWS_AS(run_hmc(t, params, 10, rng, {0.0, 0.0}), ConfigError);
    params = HmcParams{};
    params.mass = {1.0};
    CHECK_THROWS_AS(run_hmc(t, params, 10, rng, {0.0, 0.0}), ConfigError);
}

TEST_CASE("rejected steps repeat the previous point") {
    RegisterSpec spec(4, 1);
    const auto target = make_double_well_1d();
    Rng rng(77);
    const auto chain = run_qdhmc(spec, target, ScheduleSampler{}, 300, rng);
    REQUIRE(chain.steps() == 300);
    REQUIRE(chain.flat_indices.size() == 300);
    REQUIRE(chain.schedules.size() == 300);
    bool saw_rejection = false;
    for (std::size_t i = 1; i < chain.steps(); ++i) {
        if (!chain.accepted[i]) {
            saw_rejection = true;
            CHECK(chain.points[i] == chain.points[i - 1]);
            CHECK(chain.flat_indices[i] == chain.flat_indices[i - 1]);
        }
        const auto k = static_cast<std::int64_t>(chain.flat_indices[i]);
        CHECK(chain.points[i] == doctest::Approx(grid_coord(spec, k)).epsilon(1e-14));
    }
    CHECK(saw_rejection);
}

TEST_CASE("grid chains and proposals are reproducible from the seed") {
    RegisterSpec spec(3, 2);
    const auto target = make_double_well();
    Rng a(99), b(99);
    const auto ca = run_qdhmc(spec, target, ScheduleSampler{}, 50, a);
    const auto cb = run_qdhmc(spec, target, ScheduleSampler{}, 50, b);
    CHECK(ca.flat_indices == cb.flat_indices);
    CHECK(ca.accepted == cb.accepted);
}

TEST_CASE("measured proposal frequencies match the dense transition matrix") {
    RegisterSpec spec(3, 1);
    const auto target = make_double_well_1d();
    const auto pot = tabulate_energy(spec, target);

    ScheduleSampler sampler;  // degenerate: a single fixed schedule
    sampler.t_min = sampler.t_max = 1.7;
    sampler.r_min = sampler.r_max = 6;
    const TrotterSchedule sched{1.0, 1.0, 1.7, 6, true};
    const auto p = exact_proposal_matrix(spec, target, sched);

    Rng rng(31415);
    const int n_draws = 10000;
    for (std::int64_t x : {std::int64_t{2}, std::int64_t{5}}) {
        std::vector<int> counts(8, 0);
        for (int i = 0; i < n_draws; ++i) {
            const auto prop = qdhmc_propose({x}, pot, sampler, rng);
            ++counts[static_cast<std::size_t>(prop.indices[0])];
        }
        for (std::size_t y = 0; y < 8; ++y) {
            const double expect = p(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
            const double freq = static_cast<double>(counts[y]) / n_draws;
            const double sigma = std::sqrt(std::max(expect * (1.0 - expect), 1e-12) / n_draws);
            CHECK(std::abs(freq - expect) <= 5.0 * sigma + 0.002);
        }
    }
}

TEST_CASE("stationary flow between any two grid points is symmetric") {
    for (int d : {2, 3, 4}) {
        RegisterSpec spec(d, 1);
        const auto target = make_double_well_1d(0.9);
        const TrotterSchedule sched{1.0, 1.0, 1.6, 5, true};
        const auto p = exact_proposal_matrix(spec, target, sched);
        const auto b = exact_grid_boltzmann(spec, target);
        const auto pot = tabulate_energy(spec, target);
        const auto n = static_cast<Eigen::Index>(spec.total_points());

        Eigen::MatrixXd flow(n, n);
        for (Eigen::Index x = 0; x < n; ++x)
            for (Eigen::Index y = 0; y < n; ++y) {
                const double fx = pot.values[static_cast<std::size_t>(x)];
                const double fy = pot.values[static_cast<std::size_t>(y)];
                const double alpha = std::min(1.0, std::exp(fx - fy));
                flow(y, x) = b[static_cast<std::size_t>(x)] * p(y, x) * alpha;
            }
        CHECK((flow - flow.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("acceptance_rate handles empty chains") {
    CHECK(ChainResult{}.acceptance_rate() == 0.0);
}

TEST_CASE("uniform_box_point stays inside the box") {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto x = uniform_box_point(-2.0, 3.0, 3, rng);
        REQUIRE(x.size() == 3);
        for (double v : x) {
            CHECK(v >= -2.0);
            CHECK(v < 3.0);
        }
    }
    CHECK_THROWS_AS(uniform_box_point(1.0, 1.0, 2, rng), ConfigError);
}
