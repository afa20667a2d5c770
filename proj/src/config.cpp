#include "fswitch/config.hpp"

#include <json.hpp>

#include "fswitch/csv_io.hpp"
#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

void reject_unknown_keys(const json& node, const char* scope,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : node.items()) {
        bool ok = false;
        for (const char* k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw ConfigError(std::string(scope) + ": unknown key '" + key + "'");
        }
    }
}

double number_at(const json& node, const char* scope, const char* key, double fallback) {
    if (!node.contains(key)) {
        return fallback;
    }
    const auto& v = node.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string(scope) + "." + key + ": expected a number");
    }
    return v.get<double>();
}

RigConfig parse_rig(const json& node) {
    reject_unknown_keys(node, "rig",
                        {"pulley_radius_mm", "actuator_stroke_mm", "sample_rate_hz",
                         "hook_mass_kg", "gravity_mps2", "on_duration_ms", "off_duration_ms"});
    RigConfig rig;
    rig.pulley_radius_mm = number_at(node, "rig", "pulley_radius_mm", rig.pulley_radius_mm);
    rig.actuator_stroke_mm =
        number_at(node, "rig", "actuator_stroke_mm", rig.actuator_stroke_mm);
    rig.sample_rate_hz = number_at(node, "rig", "sample_rate_hz", rig.sample_rate_hz);
    rig.hook_mass_kg = number_at(node, "rig", "hook_mass_kg", rig.hook_mass_kg);
    rig.gravity_mps2 = number_at(node, "rig", "gravity_mps2", rig.gravity_mps2);
    rig.on_duration_ms = number_at(node, "rig", "on_duration_ms", rig.on_duration_ms);
    rig.off_duration_ms = number_at(node, "rig", "off_duration_ms", rig.off_duration_ms);
    return rig;
}

GrooveLayout parse_layout(const json& node) {
    reject_unknown_keys(node, "layout",
                        {"groove_count", "groove_pitch_deg", "segment_angle_deg",
                         "groove_radius_mm", "pin_diameter_mm", "pin_diameter_tol_mm",
                         "substrate_thickness_mm", "tendon_contact_angle_deg"});
    GrooveLayout layout;
    if (node.contains("groove_count")) {
        if (!node.at("groove_count").is_number_integer()) {
            throw ConfigError("layout.groove_count: expected an integer");
        }
        layout.groove_count = node.at("groove_count").get<int>();
    }
    layout.groove_pitch_deg =
        number_at(node, "layout", "groove_pitch_deg", layout.groove_pitch_deg);
    layout.segment_angle_deg =
        number_at(node, "layout", "segment_angle_deg", layout.segment_angle_deg);
    layout.groove_radius_mm =
        number_at(node, "layout", "groove_radius_mm", layout.groove_radius_mm);
    layout.pin_diameter_mm =
        number_at(node, "layout", "pin_diameter_mm", layout.pin_diameter_mm);
    layout.pin_diameter_tol_mm =
        number_at(node, "layout", "pin_diameter_tol_mm", layout.pin_diameter_tol_mm);
    layout.substrate_thickness_mm =
        number_at(node, "layout", "substrate_thickness_mm", layout.substrate_thickness_mm);
    layout.tendon_contact_angle_deg =
        number_at(node, "layout", "tendon_contact_angle_deg", layout.tendon_contact_angle_deg);
    return layout;
}

PinConfiguration parse_pins(const json& node, const PinConfiguration& fallback) {
    reject_unknown_keys(node, "pins", {"occupied_grooves", "label"});
    PinConfiguration pins = fallback;
    if (node.contains("occupied_grooves")) {
        if (!node.at("occupied_grooves").is_array()) {
            throw ConfigError("pins.occupied_grooves: expected an array of integers");
        }
        pins.occupied_grooves.clear();
        for (const auto& v : node.at("occupied_grooves")) {
            if (!v.is_number_integer()) {
                throw ConfigError("pins.occupied_grooves: expected an array of integers");
            }
            pins.occupied_grooves.push_back(v.get<int>());
        }
    }
    if (node.contains("label")) {
        if (!node.at("label").is_string()) {
            throw ConfigError("pins.label: expected a string");
        }
        pins.label = node.at("label").get<std::string>();
    }
    return pins;
}

SwitchModelParams parse_model(const json& node, const SwitchModelParams& fallback) {
    reject_unknown_keys(
        node, "model",
        {"mu_low", "mu_high", "w", "f_thr_N", "f_r_lo_N", "f_r_hi_N", "alpha_deg"});
    SwitchModelParams model = fallback;
    model.mu_low = number_at(node, "model", "mu_low", model.mu_low);
    model.mu_high = number_at(node, "model", "mu_high", model.mu_high);
    model.weight = number_at(node, "model", "w", model.weight);
    model.threshold_force = number_at(node, "model", "f_thr_N", model.threshold_force);
    model.transition_range.lo = number_at(node, "model", "f_r_lo_N", model.transition_range.lo);
    model.transition_range.hi = number_at(node, "model", "f_r_hi_N", model.transition_range.hi);
    if (node.contains("alpha_deg")) {
        model.wrap_angle = deg_to_rad(number_at(node, "model", "alpha_deg", 0.0));
    }
    return model;
}

NoiseModel parse_noise(const json& node) {
    reject_unknown_keys(node, "noise", {"force_sigma_N", "settle_time_ms"});
    NoiseModel noise;
    noise.force_sigma = number_at(node, "noise", "force_sigma_N", noise.force_sigma);
    noise.settle_time_ms = number_at(node, "noise", "settle_time_ms", noise.settle_time_ms);
    return noise;
}

} // namespace

void ProjectConfig::validate() const {
    rig.validate();
    layout.validate();
    pins.validate(layout);
    model.validate();
    noise.validate(rig);
}

ProjectConfig parse_project_config(const std::string& json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    reject_unknown_keys(root, "config", {"rig", "layout", "pins", "model", "noise", "seed"});

    ProjectConfig config;
    if (root.contains("rig")) {
        config.rig = parse_rig(root.at("rig"));
    }
    if (root.contains("layout")) {
        config.layout = parse_layout(root.at("layout"));
    }
    if (root.contains("pins")) {
        config.pins = parse_pins(root.at("pins"), config.pins);
    }
    if (root.contains("model")) {
        config.model = parse_model(root.at("model"), config.model);
    }
    if (root.contains("noise")) {
        config.noise = parse_noise(root.at("noise"));
    }
    if (root.contains("seed")) {
        if (!root.at("seed").is_number_unsigned() && !root.at("seed").is_number_integer()) {
            throw ConfigError("seed: expected a non-negative integer");
        }
        const auto seed = root.at("seed").get<std::int64_t>();
        if (seed < 0) {
            throw ConfigError("seed: expected a non-negative integer");
        }
        config.seed = static_cast<std::uint64_t>(seed);
    }
    try {
        config.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return config;
}

ProjectConfig load_project_config(const std::filesystem::path& path) {
    return parse_project_config(read_file(path));
}

std::string project_config_to_json(const ProjectConfig& config) {
    json root;
    root["rig"] = {{"pulley_radius_mm", config.rig.pulley_radius_mm},
                   {"actuator_stroke_mm", config.rig.actuator_stroke_mm},
                   {"sample_rate_hz", config.rig.sample_rate_hz},
                   {"hook_mass_kg", config.rig.hook_mass_kg},
                   {"gravity_mps2", config.rig.gravity_mps2},
                   {"on_duration_ms", config.rig.on_duration_ms},
                   {"off_duration_ms", config.rig.off_duration_ms}};
    root["layout"] = {{"groove_count", config.layout.groove_count},
                      {"groove_pitch_deg", config.layout.groove_pitch_deg},
                      {"segment_angle_deg", config.layout.segment_angle_deg},
                      {"groove_radius_mm", config.layout.groove_radius_mm},
                      {"pin_diameter_mm", config.layout.pin_diameter_mm},
                      {"pin_diameter_tol_mm", config.layout.pin_diameter_tol_mm},
                      {"substrate_thickness_mm", config.layout.substrate_thickness_mm},
                      {"tendon_contact_angle_deg", config.layout.tendon_contact_angle_deg}};
    root["pins"] = {{"occupied_grooves", config.pins.occupied_grooves},
                    {"label", config.pins.label}};
    root["model"] = {{"mu_low", config.model.mu_low},
                     {"mu_high", config.model.mu_high},
                     {"w", config.model.weight},
                     {"f_thr_N", config.model.threshold_force},
                     {"f_r_lo_N", config.model.transition_range.lo},
                     {"f_r_hi_N", config.model.transition_range.hi},
                     {"alpha_deg", rad_to_deg(config.model.wrap_angle)}};
    root["noise"] = {{"force_sigma_N", config.noise.force_sigma},
                     {"settle_time_ms", config.noise.settle_time_ms}};
    root["seed"] = config.seed;
    return root.dump(2) + "\n";
}

std::string fit_result_to_json(const FitResult& result) {
    json root;
    root["params"] = {{"mu_low", result.params.mu_low},
                      {"mu_high", result.params.mu_high},
                      {"w", result.params.weight},
                      {"f_thr_N", result.params.threshold_force},
                      {"f_r_width_N", result.params.transition_width()},
                      {"alpha_rad", result.params.wrap_angle}};
    root["rmse_N"] = result.rmse;
    root["r_squared"] = result.r_squared;
    root["iterations"] = result.iterations;
    root["converged"] = result.converged;
    return root.dump(2) + "\n";
}

FitResult fit_result_from_json(const std::string& json_text) {
    const json root = parse_json(json_text);
    try {
        FitResult result;
        const auto& p = root.at("params");
        result.params.mu_low = p.at("mu_low").get<double>();
        result.params.mu_high = p.at("mu_high").get<double>();
        result.params.weight = p.at("w").get<double>();
        result.params.threshold_force = p.at("f_thr_N").get<double>();
        // The interval's placement is absorbed by f_thr; only the width is
        // serialized, so anchor the range at zero.
        result.params.transition_range = {0.0, p.at("f_r_width_N").get<double>()};
        result.params.wrap_angle = p.at("alpha_rad").get<double>();
        result.rmse = root.at("rmse_N").get<double>();
        result.r_squared = root.at("r_squared").get<double>();
        result.iterations = root.at("iterations").get<int>();
        result.converged = root.at("converged").get<bool>();
        return result;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid fit result JSON: ") + e.what());
    }
}

std::string manifest_to_json(const SimulationManifest& manifest) {
    json traces = json::array();
    for (const auto& t : manifest.traces) {
        traces.push_back({{"file", t.file},
                          {"direction", t.direction},
                          {"mass_kg", t.mass_kg},
                          {"speed_percent", t.speed_percent},
                          {"load_N", t.load_N},
                          {"ground_truth_friction_N", t.ground_truth_friction_N},
                          {"repetitions", t.repetitions},
                          {"seed", t.seed}});
    }
    json root;
    root["master_seed"] = manifest.master_seed;
    root["rig"] = {{"pulley_radius_mm", manifest.rig.pulley_radius_mm},
                   {"actuator_stroke_mm", manifest.rig.actuator_stroke_mm},
                   {"sample_rate_hz", manifest.rig.sample_rate_hz},
                   {"hook_mass_kg", manifest.rig.hook_mass_kg},
                   {"gravity_mps2", manifest.rig.gravity_mps2},
                   {"on_duration_ms", manifest.rig.on_duration_ms},
                   {"off_duration_ms", manifest.rig.off_duration_ms}};
    root["traces"] = traces;
    return root.dump(2) + "\n";
}

SimulationManifest manifest_from_json(const std::string& json_text) {
    const json root = parse_json(json_text);
    try {
        SimulationManifest manifest;
        manifest.master_seed = root.at("master_seed").get<std::uint64_t>();
        if (root.contains("rig")) {
            manifest.rig = parse_rig(root.at("rig"));
        }
        for (const auto& t : root.at("traces")) {
            ManifestEntry entry;
            entry.file = t.at("file").get<std::string>();
            entry.direction = t.at("direction").get<std::string>();
            entry.mass_kg = t.at("mass_kg").get<double>();
            entry.speed_percent = t.at("speed_percent").get<double>();
            entry.load_N = t.at("load_N").get<double>();
            entry.ground_truth_friction_N = t.at("ground_truth_friction_N").get<double>();
            entry.repetitions = t.at("repetitions").get<int>();
            entry.seed = t.at("seed").get<std::uint64_t>();
            manifest.traces.push_back(entry);
        }
        return manifest;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid manifest JSON: ") + e.what());
    }
}

} // namespace fswitch
