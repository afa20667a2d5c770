#include "fswitch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fswitch/capstan.hpp"

namespace fswitch {

void GrooveLayout::validate() const {
    if (groove_count < 1) {
        throw std::domain_error("groove_count must be >= 1");
    }
    if (!(groove_pitch_deg > 0.0) || !(segment_angle_deg > 0.0)) {
        throw std::domain_error("groove pitch and segment angle must be > 0");
    }
    // 15 * 5.96 = 89.4 vs the stated 89.45; the segment extends at most half
    // a pitch beyond the end grooves.
    if (std::fabs(groove_count * groove_pitch_deg - segment_angle_deg) > 0.05 + 1e-9) {
        throw std::domain_error("groove_count * groove_pitch inconsistent with segment angle");
    }
    if (!(groove_radius_mm > 0.0) || !(pin_diameter_mm > 0.0)) {
        throw std::domain_error("groove radius and pin diameter must be > 0");
    }
    if (!(pin_diameter_mm < 2.0 * groove_radius_mm + pin_diameter_tol_mm)) {
        throw std::domain_error("pin does not seat in groove");
    }
    if (!(substrate_thickness_mm > 0.0)) {
        throw std::domain_error("substrate thickness must be > 0");
    }
    if (!(tendon_contact_angle_deg > 0.0) || !(tendon_contact_angle_deg <= segment_angle_deg)) {
        throw std::domain_error("tendon contact angle must lie in (0, segment angle]");
    }
}

void PinConfiguration::validate(const GrooveLayout& layout) const {
    if (occupied_grooves.empty()) {
        throw std::domain_error("pin configuration needs at least one pin");
    }
    for (std::size_t i = 0; i < occupied_grooves.size(); ++i) {
        const int idx = occupied_grooves[i];
        if (idx < 0 || idx >= layout.groove_count) {
            throw std::domain_error("groove index " + std::to_string(idx) + " out of range");
        }
        if (i > 0 && occupied_grooves[i - 1] >= idx) {
            throw std::domain_error("groove indices must be sorted and distinct");
        }
    }
}

PinConfiguration uniform_configuration(int pin_count, int gap, const GrooveLayout& layout) {
    layout.validate();
    if (pin_count < 1) {
        throw std::domain_error("pin_count must be >= 1");
    }
    if (gap < 0) {
        throw std::domain_error("gap must be >= 0");
    }
    const int last = (pin_count - 1) * (gap + 1);
    if (last >= layout.groove_count) {
        throw std::domain_error("pin configuration exceeds groove count");
    }
    PinConfiguration config;
    config.occupied_grooves.reserve(pin_count);
    for (int k = 0; k < pin_count; ++k) {
        config.occupied_grooves.push_back(k * (gap + 1));
    }
    config.label = std::to_string(pin_count) + "pins_gap" + std::to_string(gap);
    return config;
}

double spanned_angle(const PinConfiguration& config, const GrooveLayout& layout) {
    layout.validate();
    config.validate(layout);
    const auto [min_it, max_it] =
        std::minmax_element(config.occupied_grooves.begin(), config.occupied_grooves.end());
    return (*max_it - *min_it) * layout.groove_pitch_deg;
}

double estimate_weight(const PinConfiguration& config, const GrooveLayout& layout,
                       double pulley_radius_mm) {
    layout.validate();
    config.validate(layout);
    if (!(pulley_radius_mm > 0.0)) {
        throw std::domain_error("pulley radius must be > 0");
    }
    const double contact_arc_mm =
        pulley_radius_mm * deg_to_rad(layout.tendon_contact_angle_deg);
    const double covered = config.pin_count() * layout.pin_diameter_mm;
    return std::min(0.5, covered / contact_arc_mm);
}

} // namespace fswitch
