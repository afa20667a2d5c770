// friction-switch: simulate the measurement rig, extract friction curves,
// fit the switch model, and report sizing numbers, with files as the
// interchange medium.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fswitch/capstan.hpp"
#include "fswitch/config.hpp"
#include "fswitch/csv_io.hpp"
#include "fswitch/errors.hpp"
#include "fswitch/fitting.hpp"
#include "fswitch/geometry.hpp"
#include "fswitch/pipeline.hpp"
#include "fswitch/simulate.hpp"
#include "fswitch/svg_plot.hpp"
#include "fswitch/switch_model.hpp"

namespace fs = std::filesystem;
using namespace fswitch;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;
constexpr int kExitFit = 5;

FrictionModel model_from_config(const ProjectConfig& config) {
    const SwitchModelParams model = config.model;
    return [model](double load) {
        const double f_low =
            capstan_friction_magnitude(load, {model.wrap_angle, model.mu_low});
        const double f_high =
            capstan_friction_magnitude(load, {model.wrap_angle, model.mu_high});
        return switch_friction(load, f_low, f_high, model);
    };
}

std::vector<FitParameter> parse_free_list(const std::string& spec) {
    std::vector<FitParameter> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string token = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token == "f_thr") {
            out.push_back(FitParameter::Threshold);
        } else if (token == "width") {
            out.push_back(FitParameter::Width);
        } else if (token == "w") {
            out.push_back(FitParameter::Weight);
        } else if (!token.empty()) {
            throw ConfigError("--free: unknown parameter '" + token +
                              "' (expected f_thr, width, w)");
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

int run_geometry(const std::string& config_path) {
    const ProjectConfig config = load_project_config(config_path);
    std::string indices;
    for (int idx : config.pins.occupied_grooves) {
        indices += (indices.empty() ? "" : " ") + std::to_string(idx);
    }
    std::printf("configuration: %s\n", config.pins.label.c_str());
    std::printf("occupied grooves: %s\n", indices.c_str());
    std::printf("pin count: %d\n", config.pins.pin_count());
    std::printf("spanned angle: %.2f deg\n", spanned_angle(config.pins, config.layout));
    std::printf("estimated weight: %.4f\n",
                estimate_weight(config.pins, config.layout, config.rig.pulley_radius_mm));
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override) {
    ProjectConfig config = load_project_config(config_path);
    if (seed_override) {
        config.seed = *seed_override;
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw IoError("cannot create output directory " + out_dir);
    }

    const auto loads = table1_loads();
    const FrictionModel model = model_from_config(config);

    SimulationManifest manifest;
    manifest.master_seed = config.seed;
    manifest.rig = config.rig;
    for (std::size_t i = 0; i < loads.size(); ++i) {
        for (Direction dir : {Direction::Eccentric, Direction::Concentric}) {
            const bool ecc = dir == Direction::Eccentric;
            const int reps = ecc ? kEccentricRepetitions : kConcentricRepetitions;
            const std::uint64_t seed = derive_seed(config.seed, 2 * i + (ecc ? 0 : 1));
            const ForceTrace trace =
                simulate_trial(config.rig, loads[i], model, config.noise, dir, reps, seed);

            char name[64];
            std::snprintf(name, sizeof(name), "trace_L%02zu_%s.csv", i + 1,
                          ecc ? "ecc" : "conc");
            write_trace_csv(fs::path(out_dir) / name, trace);

            const double load = load_force(loads[i], config.rig);
            manifest.traces.push_back({name, ecc ? "ecc" : "conc", loads[i].mass_kg,
                                       loads[i].speed_percent, load, model(load), reps,
                                       seed});
        }
    }
    atomic_write_file(fs::path(out_dir) / "manifest.json", manifest_to_json(manifest));
    std::printf("wrote %zu traces + manifest.json to %s\n", manifest.traces.size(),
                out_dir.c_str());
    return 0;
}

int run_extract(const std::string& traces_dir, const std::string& out_path,
                const std::string& label, double min_dwell_ms, double slope_tolerance) {
    const fs::path manifest_path = fs::path(traces_dir) / "manifest.json";
    if (!fs::exists(manifest_path)) {
        throw DataError("no manifest.json in " + traces_dir);
    }
    const SimulationManifest manifest = manifest_from_json(read_file(manifest_path));
    if (manifest.traces.empty()) {
        throw DataError("manifest lists no traces");
    }

    std::vector<ForceTrace> traces;
    traces.reserve(manifest.traces.size());
    for (const auto& entry : manifest.traces) {
        traces.push_back(read_trace_csv(fs::path(traces_dir) / entry.file,
                                        {entry.mass_kg, entry.speed_percent}, entry.seed));
    }
    FrictionCurve curve = build_friction_curve(traces, manifest.rig, min_dwell_ms,
                                               slope_tolerance);
    curve.label = label;
    write_curve_csv(out_path, curve);
    std::printf("wrote %zu-point curve to %s\n", curve.samples.size(), out_path.c_str());
    return 0;
}

int run_fit(const std::string& device_path, const std::string& low_path,
            const std::string& high_path, const std::string& out_path,
            const std::string& free_spec, const std::optional<std::string>& config_path,
            std::optional<double> init_f_thr, std::optional<double> init_width,
            std::optional<double> init_w, int max_iterations, double tolerance) {
    FitProblem problem;
    problem.device_curve = read_curve_csv(device_path);
    problem.low_curve = read_curve_csv(low_path);
    problem.high_curve = read_curve_csv(high_path);
    problem.free_parameters = parse_free_list(free_spec);
    if (problem.device_curve.samples.size() <
        std::max<std::size_t>(3, problem.free_parameters.size() + 1)) {
        throw FitError("under-determined fit: device curve has " +
                       std::to_string(problem.device_curve.samples.size()) + " samples");
    }

    SwitchModelParams initial{0.05, 0.24, 0.2, 0.0, {0.0, 1.0}, deg_to_rad(63.89)};
    if (config_path) {
        initial = load_project_config(*config_path).model;
    }
    const double lo = problem.device_curve.min_load();
    const double hi = problem.device_curve.max_load();
    initial.threshold_force = init_f_thr.value_or(
        config_path ? initial.threshold_force : (lo + hi) / 2.0);
    const double width = init_width.value_or(
        config_path ? initial.transition_width() : (hi - lo) / 4.0);
    initial.transition_range = {0.0, width};
    initial.weight = init_w.value_or(config_path ? initial.weight : 0.25);

    try {
        const FitResult result =
            fit_switch_model(problem, initial, max_iterations, tolerance);
        atomic_write_file(out_path, fit_result_to_json(result));
        std::printf("f_thr=%.6g N  width=%.6g N  w=%.6g  rmse=%.6g N  r2=%.6g  "
                    "iterations=%d  converged=%s\n",
                    result.params.threshold_force, result.params.transition_width(),
                    result.params.weight, result.rmse, result.r_squared, result.iterations,
                    result.converged ? "yes" : "no");
        return 0;
    } catch (const ExtrapolationError& e) {
        throw FitError(std::string("domain mismatch: ") + e.what());
    }
}

int run_predict(const std::string& params_path, const std::string& low_path,
                const std::string& high_path, const std::string& out_path,
                const std::vector<double>& loads_flag) {
    const FitResult fit = fit_result_from_json(read_file(params_path));
    const FrictionCurve low = read_curve_csv(low_path);
    const FrictionCurve high = read_curve_csv(high_path);

    std::vector<double> loads = loads_flag;
    if (loads.empty()) {
        for (const auto& s : low.samples) {
            loads.push_back(s.load_force);
        }
    }
    std::sort(loads.begin(), loads.end());
    loads.erase(std::unique(loads.begin(), loads.end()), loads.end());
    FrictionCurve curve = switch_friction_curve(loads, low, high, fit.params);
    write_curve_csv(out_path, curve);
    std::printf("wrote %zu-point model curve to %s\n", curve.samples.size(),
                out_path.c_str());
    return 0;
}

int run_sizing(double mu, double alpha_deg) {
    if (!(alpha_deg > 0.0) || !(alpha_deg <= 360.0)) {
        throw ConfigError("alpha_deg must lie in (0, 360]");
    }
    const CapstanContact contact{deg_to_rad(alpha_deg), mu};
    const double advantage = eccentric_advantage(contact);
    std::printf("mu=%.4g  alpha=%.4g deg (%.6g rad)\n", mu, alpha_deg, contact.wrap_angle);
    std::printf("eccentric advantage: %.6f (fraction of holding force carried by friction)\n",
                advantage);
    std::printf("equivalent motor downsizing: %.2f %%\n", 100.0 * advantage);
    return 0;
}

int run_plot(const std::vector<std::string>& curve_paths, const std::string& out_path) {
    std::vector<FrictionCurve> curves;
    curves.reserve(curve_paths.size());
    for (const auto& path : curve_paths) {
        curves.push_back(read_curve_csv(path));
    }
    atomic_write_file(out_path, curves_to_svg(curves));
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive friction pulley toolkit: rig simulation, friction extraction, "
                 "switch-model fitting, and sizing analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string traces_dir;
    std::string label = "extracted";
    std::string free_spec = "f_thr,width,w";
    std::string device_path;
    std::string low_path;
    std::string high_path;
    std::string params_path;
    std::vector<std::string> curve_paths;
    std::vector<double> loads_flag;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> fit_config;
    std::optional<double> init_f_thr;
    std::optional<double> init_width;
    std::optional<double> init_w;
    double min_dwell_ms = kDefaultMinDwellMs;
    double slope_tolerance = kDefaultSlopeTolerance;
    int max_iterations = 2000;
    double tolerance = 1e-12;
    double mu = 0.0;
    double alpha_deg = 0.0;

    auto* geometry = app.add_subcommand("geometry", "Report pin layout, spanned angle, and "
                                                    "the estimated weighting factor");
    geometry->add_option("--config", config_path, "project config JSON")->required();

    auto* simulate = app.add_subcommand("simulate", "Generate synthetic rig traces for the "
                                                    "full load table");
    simulate->add_option("--config", config_path, "project config JSON")->required();
    simulate->add_option("--out", out_path, "output directory")->required();
    simulate->add_option("--seed", seed_override, "override the config seed");

    auto* extract = app.add_subcommand("extract", "Build a friction curve from a directory "
                                                  "of trace CSVs");
    extract->add_option("traces", traces_dir, "directory with trace CSVs + manifest.json")
        ->required();
    extract->add_option("--out", out_path, "output curve CSV")->required();
    extract->add_option("--label", label, "label for the extracted curve");
    extract->add_option("--min-dwell-ms", min_dwell_ms, "minimum plateau duration");
    extract->add_option("--slope-tolerance", slope_tolerance, "plateau slope gate, N/s");

    auto* fit = app.add_subcommand("fit", "Fit switch-model parameters to a device curve");
    fit->add_option("device", device_path, "measured device curve CSV")->required();
    fit->add_option("low", low_path, "low-friction characteristic curve CSV")->required();
    fit->add_option("high", high_path, "high-friction characteristic curve CSV")->required();
    fit->add_option("--out", out_path, "output FitResult JSON")->required();
    fit->add_option("--free", free_spec, "free parameters, comma list of f_thr,width,w");
    fit->add_option("--config", fit_config, "config JSON supplying fixed model values");
    fit->add_option("--init-f-thr", init_f_thr, "initial threshold force, N");
    fit->add_option("--init-width", init_width, "initial transition width, N");
    fit->add_option("--init-w", init_w, "initial weighting factor");
    fit->add_option("--max-iterations", max_iterations, "iteration cap");
    fit->add_option("--tolerance", tolerance, "relative convergence tolerance");

    auto* predict = app.add_subcommand("predict", "Evaluate a fitted model over given loads");
    predict->add_option("params", params_path, "FitResult JSON")->required();
    predict->add_option("low", low_path, "low-friction characteristic curve CSV")->required();
    predict->add_option("high", high_path, "high-friction characteristic curve CSV")
        ->required();
    predict->add_option("--out", out_path, "output curve CSV")->required();
    predict->add_option("--loads", loads_flag, "loads in N (default: low-curve loads)")
        ->delimiter(',');

    auto* sizing = app.add_subcommand("sizing", "Eccentric advantage and actuator downsizing "
                                                "for a contact");
    sizing->add_option("mu", mu, "friction coefficient")->required();
    sizing->add_option("alpha_deg", alpha_deg, "wrap angle, degrees")->required();

    auto* plot = app.add_subcommand("plot", "Render curves to a self-contained SVG");
    plot->add_option("curves", curve_paths, "curve CSV files")->required()->expected(-1);
    plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (geometry->parsed()) {
            return run_geometry(config_path);
        }
        if (simulate->parsed()) {
            return run_simulate(config_path, out_path, seed_override);
        }
        if (extract->parsed()) {
            return run_extract(traces_dir, out_path, label, min_dwell_ms, slope_tolerance);
        }
        if (fit->parsed()) {
            return run_fit(device_path, low_path, high_path, out_path, free_spec, fit_config,
                           init_f_thr, init_width, init_w, max_iterations, tolerance);
        }
        if (predict->parsed()) {
            return run_predict(params_path, low_path, high_path, out_path, loads_flag);
        }
        if (sizing->parsed()) {
            return run_sizing(mu, alpha_deg);
        }
        if (plot->parsed()) {
            return run_plot(curve_paths, out_path);
        }
    } catch (const FitError& e) {
        std::cerr << "fit error: " << e.what() << "\n";
        return kExitFit;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
