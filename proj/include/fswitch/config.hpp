#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fswitch/fitting.hpp"
#include "fswitch/geometry.hpp"
#include "fswitch/rig.hpp"
#include "fswitch/switch_model.hpp"

namespace fswitch {

// Everything one experiment needs, read from a single JSON file.
// Missing keys fall back to the published rig defaults; unknown keys are
// rejected so typos cannot silently change an experiment.
struct ProjectConfig {
    RigConfig rig{};
    GrooveLayout layout{};
    PinConfiguration pins{{0, 2, 4, 6, 8, 10}, "six_single"};
    SwitchModelParams model{0.05, 0.24, 0.2, 5.7, {-2.0, 3.5}, deg_to_rad(63.89)};
    NoiseModel noise{};
    std::uint64_t seed = 1;

    void validate() const;
};

ProjectConfig parse_project_config(const std::string& json_text);
ProjectConfig load_project_config(const std::filesystem::path& path);
std::string project_config_to_json(const ProjectConfig& config);

// FitResult JSON:
// {params:{mu_low,mu_high,w,f_thr_N,f_r_width_N,alpha_rad},
//  rmse_N, r_squared, iterations, converged}
std::string fit_result_to_json(const FitResult& result);
FitResult fit_result_from_json(const std::string& json_text);

// Per-trace entry of the simulation manifest written next to the trace CSVs.
struct ManifestEntry {
    std::string file;
    std::string direction; // "ecc" | "conc"
    double mass_kg = 0.0;
    double speed_percent = 0.0;
    double load_N = 0.0;
    double ground_truth_friction_N = 0.0;
    int repetitions = 0;
    std::uint64_t seed = 0;
};

struct SimulationManifest {
    std::uint64_t master_seed = 0;
    RigConfig rig{};
    std::vector<ManifestEntry> traces;
};

std::string manifest_to_json(const SimulationManifest& manifest);
SimulationManifest manifest_from_json(const std::string& json_text);

} // namespace fswitch
