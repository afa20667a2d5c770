#pragma once

#include <cstdint>
#include <vector>

#include "fswitch/capstan.hpp"

namespace fswitch {

// Fixed constants of the measurement rig.
struct RigConfig {
    double pulley_radius_mm = 22.0;
    double actuator_stroke_mm = 152.4;
    double sample_rate_hz = 200.0;
    double hook_mass_kg = 0.06253;
    double gravity_mps2 = 9.80665;
    double on_duration_ms = 500.0;
    double off_duration_ms = 3000.0;

    void validate() const;
};

// One calibrated weight and its open-loop actuating speed.
struct LoadCase {
    double mass_kg = 0.0;
    double speed_percent = 0.0; // (0, 100]

    void validate() const;
};

// The eleven calibrated weights with speeds 47%..57%.
std::vector<LoadCase> table1_loads();

// Tendon load (mass + hook) * g, newtons.
double load_force(const LoadCase& load_case, const RigConfig& rig);

// Additive measurement noise and post-motion settling time.
struct NoiseModel {
    double force_sigma = 0.05;    // N
    double settle_time_ms = 500.0;

    void validate(const RigConfig& rig) const;
};

enum class Phase : std::uint8_t { EccentricDwell, ConcentricDwell, Moving, Settling, Unknown };

// Timestamped force/position samples of one recorded or simulated trial.
struct ForceTrace {
    std::vector<double> timestamps; // s, uniform
    std::vector<double> forces;     // N
    std::vector<double> positions;  // mm
    std::vector<Phase> phases;
    LoadCase load_case{};
    std::uint64_t seed = 0;

    std::size_t size() const { return forces.size(); }
    void validate() const;
};

} // namespace fswitch
