#include "fswitch/capstan.hpp"

#include <cmath>
#include <stdexcept>

namespace fswitch {

void CapstanContact::validate() const {
    if (!(wrap_angle >= 0.0) || !(wrap_angle <= 2.0 * std::numbers::pi)) {
        throw std::domain_error("wrap_angle must lie in [0, 2*pi] radians");
    }
    if (!(friction_coefficient >= 0.0)) {
        throw std::domain_error("friction_coefficient must be >= 0");
    }
}

double capstan_holding_force(double load, const CapstanContact& contact, Direction direction) {
    contact.validate();
    if (!(load >= 0.0)) {
        throw std::domain_error("load must be >= 0");
    }
    const double exponent = contact.friction_coefficient * contact.wrap_angle;
    return direction == Direction::Eccentric ? load * std::exp(-exponent)
                                             : load * std::exp(exponent);
}

double capstan_friction_magnitude(double load, const CapstanContact& contact) {
    contact.validate();
    if (!(load >= 0.0)) {
        throw std::domain_error("load must be >= 0");
    }
    return load * std::sinh(contact.friction_coefficient * contact.wrap_angle);
}

double friction_from_forces(double f_eccentric, double f_concentric) {
    if (!(f_eccentric >= 0.0) || !(f_concentric >= 0.0)) {
        throw std::domain_error("holding forces must be >= 0");
    }
    return std::fabs(f_eccentric - f_concentric) / 2.0;
}

double eccentric_advantage(const CapstanContact& contact) {
    contact.validate();
    return 1.0 - std::exp(-contact.friction_coefficient * contact.wrap_angle);
}

} // namespace fswitch
