#pragma once

#include <numbers>

namespace fswitch {

constexpr double deg_to_rad(double degrees) {
    return degrees * std::numbers::pi / 180.0;
}

constexpr double rad_to_deg(double radians) {
    return radians * 180.0 / std::numbers::pi;
}

// Tendon wrapped over a single pulley segment.
struct CapstanContact {
    double wrap_angle = 0.0;           // radians, in [0, 2*pi]
    double friction_coefficient = 0.0; // dimensionless, >= 0

    void validate() const;
};

enum class Direction { Eccentric, Concentric };

// Tendon force required to hold `load` across the contact.
// Eccentric (friction assists): load * exp(-mu*alpha).
// Concentric (friction opposes): load * exp(+mu*alpha).
double capstan_holding_force(double load, const CapstanContact& contact, Direction direction);

// Absolute friction magnitude |F_c - F_e| / 2 = load * sinh(mu*alpha).
double capstan_friction_magnitude(double load, const CapstanContact& contact);

// |f_eccentric - f_concentric| / 2, the friction recovered from a
// measured holding-force pair. Symmetric in its arguments.
double friction_from_forces(double f_eccentric, double f_concentric);

// 1 - exp(-mu*alpha): fraction of the holding force carried by friction
// in a post-eccentric pose, i.e. the admissible actuator downsizing at
// equal eccentric output.
double eccentric_advantage(const CapstanContact& contact);

} // namespace fswitch
