#include "qdhmc/targets.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qdhmc/errors.hpp"

namespace qdhmc {

namespace {

void check_input(const Target& t, const std::vector<double>& x) {
    if (x.size() != static_cast<std::size_t>(t.dim))
        throw std::domain_error(t.name + ": expected " + std::to_string(t.dim) +
                                " coordinates, got " + std::to_string(x.size()));
    for (double v : x)
        if (!std::isfinite(v))
            throw std::domain_error(t.name + ": non-finite input coordinate");
}

void check_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw ConfigError("target temperature must be positive and finite");
}

}  // namespace

double Target::energy(const std::vector<double>& x) const {
    check_input(*this, x);
    return -log_prob(x) / temperature;
}

std::vector<double> Target::grad_energy(const std::vector<double>& x) const {
    check_input(*this, x);
    auto g = grad_log_prob(x);
    for (auto& v : g) v = -v / temperature;
    return g;
}

Target Target::with_temperature(double T) const {
    check_temperature(T);
    Target t = *this;
    t.temperature = T;
    return t;
}

Target make_gaussian(int n, double temperature) {
    if (n < 1) throw ConfigError("gaussian: dimension must be >= 1");
    check_temperature(temperature);
    Target t;
    t.name = "gaussian";
    t.dim = n;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += -v - v * v;
        return s;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        std::vector<double> g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = -1.0 - 2.0 * x[i];
        return g;
    };
    return t;
}

Target make_gaussian_centered(int n, double temperature) {
    if (n < 1) throw ConfigError("gaussian_centered: dimension must be >= 1");
    check_temperature(temperature);
    Target t;
    t.name = "gaussian_centered";
    t.dim = n;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += -v * v;
        return s;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        std::vector<double> g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = -2.0 * x[i];
        return g;
    };
    return t;
}

Target make_rosenbrock(int n, double temperature) {
    if (n < 2) throw ConfigError("rosenbrock: dimension must be >= 2");
    check_temperature(temperature);
    Target t;
    t.name = "rosenbrock";
    t.dim = n;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i];
            const double b = 1.0 - x[i];
            s -= 10.0 * a * a + b * b;
        }
        return s;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        std::vector<double> g(x.size(), 0.0);
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i];
            g[i] += 20.0 * a + 2.0 * (1.0 - x[i]);
            g[i + 1] -= 20.0 * a;
        }
        return g;
    };
    return t;
}

Target make_double_well(double temperature) {
    check_temperature(temperature);
    Target t;
    t.name = "double_well";
    t.dim = 2;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        const double a = x[0], b = x[1];
        return -(a * a * a * a - 4.0 * a * a + b * b) - 0.5 * a;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        const double a = x[0], b = x[1];
        return std::vector<double>{-4.0 * a * a * a + 8.0 * a - 0.5, -2.0 * b};
    };
    return t;
}

Target make_double_well_1d(double temperature) {
    check_temperature(temperature);
    Target t;
    t.name = "double_well_1d";
    t.dim = 1;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        const double a = x[0];
        return -(a * a * a * a - 4.0 * a * a) - 0.5 * a;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        const double a = x[0];
        return std::vector<double>{-4.0 * a * a * a + 8.0 * a - 0.5};
    };
    return t;
}

Target make_styblinski_tang(int n, double temperature) {
    if (n < 1) throw ConfigError("styblinski_tang: dimension must be >= 1");
    check_temperature(temperature);
    Target t;
    t.name = "styblinski_tang";
    t.dim = n;
    t.temperature = temperature;
    t.log_prob = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += v * v * v * v - 16.0 * v * v + 5.0 * v;
        return -0.5 * s;
    };
    t.grad_log_prob = [](const std::vector<double>& x) {
        std::vector<double> g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double v = x[i];
            g[i] = -0.5 * (4.0 * v * v * v - 32.0 * v + 5.0);
        }
        return g;
    };
    return t;
}

Target make_target(const std::string& name, int n, double temperature) {
    if (name == "gaussian") return make_gaussian(n, temperature);
    if (name == "gaussian_centered") return make_gaussian_centered(n, temperature);
    if (name == "rosenbrock") return make_rosenbrock(n, temperature);
    if (name == "double_well") {
        if (n != 2) throw ConfigError("double_well is fixed at 2 dimensions");
        return make_double_well(temperature);
    }
    if (name == "double_well_1d") {
        if (n != 1) throw ConfigError("double_well_1d is fixed at 1 dimension");
        return make_double_well_1d(temperature);
    }
    if (name == "styblinski_tang") return make_styblinski_tang(n, temperature);
    throw ConfigError("unknown target '" + name + "'");
}

std::vector<std::string> target_names() {
    return {"gaussian", "gaussian_centered", "rosenbrock",
            "double_well", "double_well_1d", "styblinski_tang"};
}

}  // namespace qdhmc
