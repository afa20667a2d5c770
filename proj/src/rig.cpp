#include "fswitch/rig.hpp"

#include <cmath>
#include <stdexcept>

#include "fswitch/errors.hpp"

namespace fswitch {

void RigConfig::validate() const {
    if (!(pulley_radius_mm > 0.0) || !(actuator_stroke_mm > 0.0) || !(sample_rate_hz > 0.0) ||
        !(hook_mass_kg > 0.0) || !(gravity_mps2 > 0.0) || !(on_duration_ms > 0.0) ||
        !(off_duration_ms > 0.0)) {
        throw std::domain_error("all rig constants must be strictly positive");
    }
}

void LoadCase::validate() const {
    if (!(mass_kg > 0.0)) {
        throw std::domain_error("load mass must be > 0");
    }
    if (!(speed_percent > 0.0) || !(speed_percent <= 100.0)) {
        throw std::domain_error("actuator speed must lie in (0, 100] percent");
    }
}

std::vector<LoadCase> table1_loads() {
    return {
        {0.2512, 47.0}, {0.5036, 48.0}, {1.0032, 49.0}, {1.5039, 50.0},
        {2.0050, 51.0}, {2.5054, 52.0}, {3.0072, 53.0}, {3.5086, 54.0},
        {4.0078, 55.0}, {4.5045, 56.0}, {5.0025, 57.0},
    };
}

double load_force(const LoadCase& load_case, const RigConfig& rig) {
    load_case.validate();
    rig.validate();
    return (load_case.mass_kg + rig.hook_mass_kg) * rig.gravity_mps2;
}

void NoiseModel::validate(const RigConfig& rig) const {
    if (!(force_sigma >= 0.0)) {
        throw std::domain_error("force_sigma must be >= 0");
    }
    if (!(settle_time_ms >= 0.0) || !(settle_time_ms < rig.off_duration_ms)) {
        throw ConfigError("settle_time must be shorter than the off duration");
    }
}

void ForceTrace::validate() const {
    const std::size_t n = forces.size();
    if (timestamps.size() != n || positions.size() != n || phases.size() != n) {
        throw DataError("trace arrays must have equal length");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(timestamps[i] > timestamps[i - 1])) {
            throw DataError("trace timestamps must be strictly increasing");
        }
    }
}

} // namespace fswitch
