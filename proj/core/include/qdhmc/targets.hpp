#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qdhmc {

// Boltzmann target pi(x) proportional to exp(log_prob(x)/T).
// energy(x) = -log_prob(x)/T is what the samplers work with.
struct Target {
    std::string name;
    int dim = 1;
    double temperature = 1.0;
    std::function<double(const std::vector<double>&)> log_prob;
    std::function<std::vector<double>(const std::vector<double>&)> grad_log_prob;

    double energy(const std::vector<double>& x) const;
    std::vector<double> grad_energy(const std::vector<double>& x) const;
    Target with_temperature(double T) const;
};

// log_prob = sum_i (-x_i - x_i^2); mean -1/2 per coordinate.
Target make_gaussian(int n, double temperature = 1.0);
// log_prob = sum_i (-x_i^2); centered variant.
Target make_gaussian_centered(int n, double temperature = 1.0);
// log_prob = -sum_{i<n-1} [10 (x_{i+1} - x_i)^2 + (1 - x_i)^2]; needs n >= 2.
Target make_rosenbrock(int n, double temperature = 1.0);
// log_prob = -(x0^4 - 4 x0^2 + x1^2) - 0.5 x0; fixed n = 2.
Target make_double_well(double temperature = 1.0);
// One-dimensional analog: log_prob = -(x^4 - 4 x^2) - 0.5 x.
Target make_double_well_1d(double temperature = 1.0);
// log_prob = -1/2 sum_i (x_i^4 - 16 x_i^2 + 5 x_i).
Target make_styblinski_tang(int n, double temperature = 1.0);

// Registered names: gaussian, gaussian_centered, rosenbrock, double_well,
// double_well_1d, styblinski_tang. Throws ConfigError for unknown names or
// dimensions a target cannot take.
Target make_target(const std::string& name, int n, double temperature = 1.0);
std::vector<std::string> target_names();

}  // namespace qdhmc
