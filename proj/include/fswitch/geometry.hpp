#pragma once

#include <string>
#include <vector>

namespace fswitch {

// Groove/pin layout of the adaptive pulley segment.
struct GrooveLayout {
    int groove_count = 15;
    double groove_pitch_deg = 5.96;
    double segment_angle_deg = 89.45;
    double groove_radius_mm = 0.5;
    double pin_diameter_mm = 0.94;
    double pin_diameter_tol_mm = 0.01; // metadata, not propagated
    double substrate_thickness_mm = 2.0;
    double tendon_contact_angle_deg = 63.89;

    void validate() const;
};

// Which grooves carry pins. Indices sorted, distinct, in [0, groove_count-1].
struct PinConfiguration {
    std::vector<int> occupied_grooves;
    std::string label;

    void validate(const GrooveLayout& layout) const;
    int pin_count() const { return static_cast<int>(occupied_grooves.size()); }
};

// Evenly spaced pins starting at groove 0 with `gap` empty grooves between
// neighbors: {0, gap+1, 2*(gap+1), ...}.
PinConfiguration uniform_configuration(int pin_count, int gap, const GrooveLayout& layout);

// Angle between the first and the last occupied groove, degrees.
double spanned_angle(const PinConfiguration& config, const GrooveLayout& layout);

// Arc-length fraction of the tendon contact occupied by pins, clamped to 0.5:
// min(0.5, n_pins * pin_diameter / (pulley_radius * contact_angle_rad)).
// Heuristic estimate of the model weighting factor w.
double estimate_weight(const PinConfiguration& config, const GrooveLayout& layout,
                       double pulley_radius_mm);

} // namespace fswitch
