#include "qdhmc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "qdhmc/diagnostics.hpp"
#include "qdhmc/errors.hpp"
#include "qdhmc/targets.hpp"

namespace qdhmc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string temperature_tag(double t) {
    return format_double(t);
}

ChainResult run_one_chain(const ExperimentConfig& cfg, double temperature,
                          std::uint64_t chain_seed) {
    Rng rng(chain_seed);
    const Target target = make_target(cfg.target_name, cfg.dim, temperature);
    if (cfg.sampler == "qdhmc")
        return run_qdhmc(cfg.register_spec, target, cfg.schedule, cfg.n_samples, rng);
    const auto init = uniform_box_point(cfg.register_spec.coord_min(),
                                        cfg.register_spec.coord_max(), cfg.dim, rng);
    return run_hmc(target, cfg.hmc, cfg.n_samples, rng, init);
}

// Runs all (temperature, repetition) chains on `workers` threads; the
// result slot layout is fixed up front so scheduling cannot reorder output.
std::vector<ChainResult> run_all_chains(const ExperimentConfig& cfg) {
    const std::size_t n_temps = cfg.temperatures.size();
    const std::size_t n_tasks = n_temps * cfg.repetitions;
    std::vector<ChainResult> results(n_tasks);

    int workers = cfg.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(n_tasks, 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= n_tasks || failed.load()) return;
            const std::size_t temp_idx = task / cfg.repetitions;
            const std::size_t rep = task % cfg.repetitions;
            try {
                results[task] = run_one_chain(cfg, cfg.temperatures[temp_idx],
                                              derive_seed(cfg.seed, temp_idx, rep));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) error_message = e.what();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (failed.load()) throw std::runtime_error("experiment chain failed: " + error_message);
    return results;
}

void write_trace_csv(const fs::path& path, const ExperimentConfig& cfg,
                     const std::vector<ChainResult>& reps) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path.string());
    out << "rep,step,accepted,energy";
    for (int i = 0; i < cfg.dim; ++i) out << ",coord_" << i;
    out << "\n";
    for (std::size_t rep = 0; rep < reps.size(); ++rep) {
        const auto& chain = reps[rep];
        for (std::size_t step = 0; step < chain.steps(); ++step) {
            out << rep << ',' << step << ',' << int(chain.accepted[step]) << ','
                << format_double(chain.energies[step]);
            for (int i = 0; i < cfg.dim; ++i)
                out << ',' << format_double(chain.points[step * static_cast<std::size_t>(cfg.dim) +
                                                         static_cast<std::size_t>(i)]);
            out << "\n";
        }
    }
}

json temperature_summary(double temperature, const std::vector<ChainResult>& reps) {
    json out;
    out["temperature"] = temperature;
    const auto curve = acceptance_curve({{temperature, reps}});
    if (!curve.empty()) {
        out["acceptance_mean"] = curve[0].mean;
        out["acceptance_std"] = curve[0].stddev;
    }
    double best = std::numeric_limits<double>::infinity();
    double tau_sum = 0.0, ess_sum = 0.0;
    std::size_t tau_count = 0;
    for (const auto& chain : reps) {
        for (double e : chain.energies) best = std::min(best, e);
        try {
            const auto est = autocorrelation_time(chain.energies);
            tau_sum += est.tau;
            ess_sum += static_cast<double>(chain.energies.size()) / (2.0 * est.tau);
            ++tau_count;
        } catch (const ZeroVarianceError&) {
            // a frozen chain has no autocorrelation estimate
        } catch (const InsufficientDataError&) {
        }
    }
    if (std::isfinite(best)) out["best_energy"] = best;
    if (tau_count > 0) {
        out["tau_energy_mean"] = tau_sum / static_cast<double>(tau_count);
        out["ess_mean"] = ess_sum / static_cast<double>(tau_count);
        out["tau_chains"] = tau_count;
    }
    return out;
}

void apply_override(ExperimentConfig& cfg, const std::string& key, const json& value) {
    if (key == "step_size") cfg.hmc.step_size = value.get<double>();
    else if (key == "leapfrog_steps") cfg.hmc.leapfrog_steps = value.get<int>();
    else if (key == "eta") cfg.schedule.eta_min = cfg.schedule.eta_max = value.get<double>();
    else if (key == "lambda")
        cfg.schedule.lambda_min = cfg.schedule.lambda_max = value.get<double>();
    else if (key == "t_min") cfg.schedule.t_min = value.get<double>();
    else if (key == "t_max") cfg.schedule.t_max = value.get<double>();
    else if (key == "r_min") cfg.schedule.r_min = value.get<int>();
    else if (key == "r_max") cfg.schedule.r_max = value.get<int>();
    else throw ConfigError("sweep: unknown hyperparameter '" + key + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
    if (sampler != "qdhmc" && sampler != "hmc")
        throw ConfigError("sampler must be 'qdhmc' or 'hmc'");
    if (dim < 1) throw ConfigError("dim must be >= 1");
    if (register_spec.num_dims != dim)
        throw ConfigError("register num_dims must equal the target dimension");
    if (temperatures.empty()) throw ConfigError("temperature list is empty");
    for (double t : temperatures)
        if (!(t > 0.0)) throw ConfigError("temperatures must be positive");
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    (void)make_target(target_name, dim, temperatures.front());  // name/dim check
    if (sampler == "qdhmc") schedule.validate();
    else hmc.validate(dim);
    if (snapshot.steps < 1) throw ConfigError("snapshot steps must be >= 1");
    if (!(snapshot.total_time > 0.0)) throw ConfigError("snapshot time must be positive");
}

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig cfg;
    cfg.target_name = j.value("target", cfg.target_name);
    cfg.dim = j.value("dim", cfg.dim);
    cfg.sampler = j.value("sampler", cfg.sampler);
    const int qubits = j.value("qubits_per_dim", 5);
    cfg.register_spec = RegisterSpec(qubits, cfg.dim);
    if (j.contains("schedule")) {
        const auto& s = j.at("schedule");
        cfg.schedule.t_min = s.value("t_min", cfg.schedule.t_min);
        cfg.schedule.t_max = s.value("t_max", cfg.schedule.t_max);
        cfg.schedule.r_min = s.value("r_min", cfg.schedule.r_min);
        cfg.schedule.r_max = s.value("r_max", cfg.schedule.r_max);
        if (s.contains("eta"))
            cfg.schedule.eta_min = cfg.schedule.eta_max = s.at("eta").get<double>();
        cfg.schedule.eta_min = s.value("eta_min", cfg.schedule.eta_min);
        cfg.schedule.eta_max = s.value("eta_max", cfg.schedule.eta_max);
        if (s.contains("lambda"))
            cfg.schedule.lambda_min = cfg.schedule.lambda_max = s.at("lambda").get<double>();
        cfg.schedule.lambda_min = s.value("lambda_min", cfg.schedule.lambda_min);
        cfg.schedule.lambda_max = s.value("lambda_max", cfg.schedule.lambda_max);
        cfg.schedule.flip_momentum = s.value("flip_momentum", cfg.schedule.flip_momentum);
    }
    if (j.contains("hmc")) {
        const auto& h = j.at("hmc");
        cfg.hmc.step_size = h.value("step_size", cfg.hmc.step_size);
        cfg.hmc.leapfrog_steps = h.value("leapfrog_steps", cfg.hmc.leapfrog_steps);
        if (h.contains("mass")) cfg.hmc.mass = h.at("mass").get<std::vector<double>>();
    }
    if (j.contains("temperatures"))
        cfg.temperatures = j.at("temperatures").get<std::vector<double>>();
    cfg.n_samples = j.value("samples", cfg.n_samples);
    cfg.repetitions = j.value("repetitions", cfg.repetitions);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.out_dir = j.value("out", cfg.out_dir);
    cfg.workers = j.value("workers", cfg.workers);
    if (j.contains("snapshot")) {
        const auto& s = j.at("snapshot");
        cfg.snapshot.total_time = s.value("time", cfg.snapshot.total_time);
        cfg.snapshot.steps = s.value("steps", cfg.snapshot.steps);
        cfg.snapshot.eta = s.value("eta", cfg.snapshot.eta);
        cfg.snapshot.lambda = s.value("lambda", cfg.snapshot.lambda);
        if (s.contains("start"))
            cfg.snapshot.start = s.at("start").get<std::vector<std::int64_t>>();
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["target"] = cfg.target_name;
    j["dim"] = cfg.dim;
    j["sampler"] = cfg.sampler;
    j["qubits_per_dim"] = cfg.register_spec.qubits_per_dim;
    j["schedule"] = {{"t_min", cfg.schedule.t_min},
                     {"t_max", cfg.schedule.t_max},
                     {"r_min", cfg.schedule.r_min},
                     {"r_max", cfg.schedule.r_max},
                     {"eta_min", cfg.schedule.eta_min},
                     {"eta_max", cfg.schedule.eta_max},
                     {"lambda_min", cfg.schedule.lambda_min},
                     {"lambda_max", cfg.schedule.lambda_max},
                     {"flip_momentum", cfg.schedule.flip_momentum}};
    j["hmc"] = {{"step_size", cfg.hmc.step_size},
                {"leapfrog_steps", cfg.hmc.leapfrog_steps}};
    if (!cfg.hmc.mass.empty()) j["hmc"]["mass"] = cfg.hmc.mass;
    j["temperatures"] = cfg.temperatures;
    j["samples"] = cfg.n_samples;
    j["repetitions"] = cfg.repetitions;
    j["seed"] = cfg.seed;
    j["out"] = cfg.out_dir;
    j["workers"] = cfg.workers;
    j["snapshot"] = {{"time", cfg.snapshot.total_time},
                     {"steps", cfg.snapshot.steps},
                     {"eta", cfg.snapshot.eta},
                     {"lambda", cfg.snapshot.lambda}};
    if (!cfg.snapshot.start.empty()) j["snapshot"]["start"] = cfg.snapshot.start;
    return j;
}

json run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    fs::create_directories(cfg.out_dir);
    const auto results = run_all_chains(cfg);

    json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["config"] = config_to_json(cfg);
    summary["results"] = json::array();

    for (std::size_t ti = 0; ti < cfg.temperatures.size(); ++ti) {
        const double temperature = cfg.temperatures[ti];
        std::vector<ChainResult> reps(results.begin() + static_cast<std::ptrdiff_t>(ti * cfg.repetitions),
                                      results.begin() + static_cast<std::ptrdiff_t>((ti + 1) * cfg.repetitions));
        const fs::path csv = fs::path(cfg.out_dir) /
                             ("trace_T" + temperature_tag(temperature) + ".csv");
        write_trace_csv(csv, cfg, reps);
        auto entry = temperature_summary(temperature, reps);
        entry["trace_file"] = csv.filename().string();
        summary["results"].push_back(std::move(entry));
    }

    const auto t1 = std::chrono::steady_clock::now();
    summary["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    std::ofstream out(fs::path(cfg.out_dir) / "summary.json");
    if (!out) throw ConfigError("cannot write summary.json in " + cfg.out_dir);
    out << summary.dump(2) << "\n";
    return summary;
}

json sweep(const ExperimentConfig& base, const json& grid, const std::string& metric) {
    base.validate();
    if (metric != "final_energy" && metric != "tau")
        throw ConfigError("sweep metric must be 'final_energy' or 'tau'");
    if (!grid.is_object() || grid.empty())
        throw ConfigError("sweep grid is empty");

    std::vector<std::string> keys;
    std::vector<std::vector<json>> values;
    for (const auto& [key, list] : grid.items()) {
        if (!list.is_array() || list.empty())
            throw ConfigError("sweep grid entry '" + key + "' must be a nonempty array");
        keys.push_back(key);
        values.push_back(std::vector<json>(list.begin(), list.end()));
    }

    json candidates = json::array();
    std::vector<std::size_t> idx(keys.size(), 0);
    for (;;) {
        ExperimentConfig cfg = base;
        cfg.out_dir.clear();  // candidates do not write traces
        json params;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            apply_override(cfg, keys[i], values[i][idx[i]]);
            params[keys[i]] = values[i][idx[i]];
        }
        if (cfg.sampler == "qdhmc") cfg.schedule.validate();
        else cfg.hmc.validate(cfg.dim);

        const auto results = run_all_chains(cfg);
        double metric_sum = 0.0;
        std::size_t metric_count = 0;
        for (const auto& chain : results) {
            if (chain.steps() == 0) continue;
            if (metric == "final_energy") {
                metric_sum += chain.energies.back();
                ++metric_count;
            } else {
                try {
                    metric_sum += autocorrelation_time(chain.energies).tau;
                    ++metric_count;
                } catch (const std::exception&) {
                }
            }
        }
        json cand;
        cand["params"] = params;
        cand["metric"] = metric_count ? metric_sum / static_cast<double>(metric_count)
                                      : std::numeric_limits<double>::infinity();
        // boundary flag: any swept value sitting at the end of its list
        bool boundary = false;
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (values[i].size() > 1 && (idx[i] == 0 || idx[i] + 1 == values[i].size()))
                boundary = true;
        cand["on_grid_boundary"] = boundary;
        candidates.push_back(std::move(cand));

        bool exhausted = false;
        for (std::size_t pos = keys.size();;) {
            if (pos == 0) {
                exhausted = true;
                break;
            }
            --pos;
            if (++idx[pos] < values[pos].size()) break;
            idx[pos] = 0;
        }
        if (exhausted) break;
    }

    std::sort(candidates.begin(), candidates.end(), [](const json& a, const json& b) {
        return a.at("metric").get<double>() < b.at("metric").get<double>();
    });

    json out;
    out["schema_version"] = kSchemaVersion;
    out["metric"] = metric;
    out["ranking"] = candidates;
    if (!candidates.empty() && candidates.front().at("on_grid_boundary").get<bool>()) {
        std::fprintf(stderr,
                     "[qdhmc] warning: best sweep candidate lies on the grid boundary\n");
        out["best_on_boundary"] = true;
    }

    if (!base.out_dir.empty()) {
        fs::create_directories(base.out_dir);
        std::ofstream f(fs::path(base.out_dir) / "sweep.json");
        if (!f) throw ConfigError("cannot write sweep.json in " + base.out_dir);
        f << out.dump(2) << "\n";
    }
    return out;
}

std::vector<std::vector<double>> snapshot_wavefunction(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sampler != "qdhmc")
        throw ConfigError("snapshot_wavefunction requires the qdhmc sampler");
    if (cfg.dim > 2)
        throw UnsupportedError("snapshot_wavefunction supports at most 2 dimensions");
    const RegisterSpec& spec = cfg.register_spec;
    const Target target = make_target(cfg.target_name, cfg.dim, cfg.temperatures.front());
    const GridPotential potential = tabulate_energy(spec, target);

    std::vector<std::int64_t> start = cfg.snapshot.start;
    if (start.empty()) {
        const auto n = static_cast<std::int64_t>(spec.points_per_dim());
        start.assign(static_cast<std::size_t>(cfg.dim),
                     n / 2 + std::max<std::int64_t>(1, n / 8));
    }

    TrotterSchedule step;
    step.eta = cfg.snapshot.eta;
    step.lambda = cfg.snapshot.lambda;
    step.total_time = cfg.snapshot.total_time / cfg.snapshot.steps;
    step.steps = 1;
    step.flip_momentum = false;  // a position-basis sign mask; no effect on any snapshot
    step.validate();

    Statevector state = Statevector::basis_state(spec, start);
    std::vector<std::vector<double>> snaps;
    snaps.push_back(state.probabilities());
    for (int s = 0; s < cfg.snapshot.steps; ++s) {
        trotter_evolve(state, potential, step);
        snaps.push_back(state.probabilities());
    }

    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        const auto n = spec.points_per_dim();
        for (std::size_t s = 0; s < snaps.size(); ++s) {
            char name[48];
            std::snprintf(name, sizeof(name), "snapshot_step%02zu.csv", s);
            std::ofstream out(fs::path(cfg.out_dir) / name);
            if (!out) throw ConfigError("cannot write snapshot files in " + cfg.out_dir);
            const std::size_t rows = cfg.dim == 2 ? n : 1;
            for (std::size_t row = 0; row < rows; ++row) {
                for (std::size_t col = 0; col < n; ++col)
                    out << (col ? "," : "") << format_double(snaps[s][row * n + col]);
                out << "\n";
            }
        }
    }
    return snaps;
}

}  // namespace qdhmc
