#pragma once

#include <vector>

#include "fswitch/capstan.hpp"
#include "fswitch/curve.hpp"

namespace fswitch {

// Load interval over which the low-to-high transition effectively happens.
struct TransitionRange {
    double lo = 0.0; // N
    double hi = 0.0; // N, > lo
};

// Full parameter set of the dual-material switch model.
struct SwitchModelParams {
    double mu_low = 0.05;                  // pins
    double mu_high = 0.24;                 // silicone substrate
    double weight = 0.0;                   // w, in [0, 0.5]
    double threshold_force = 0.0;          // F_thr, N
    TransitionRange transition_range{};    // F_r, N
    double wrap_angle = 0.0;               // alpha, radians

    void validate() const;

    double transition_width() const { return transition_range.hi - transition_range.lo; }
};

// Logistic blend factor 1 / (1 + exp(-(load - threshold)/scale)).
// Strictly increasing in load, strictly inside (0, 1). scale must be > 0.
double sigmoid_weight(double load, double threshold_force, double scale);

// Sigmoid scale for which the blend traverses 5% -> 95% exactly over the
// given range: (hi - lo) / (2*ln 19).
double transition_scale(const TransitionRange& range);

// Blended friction (1+w)*f_low*(1-S) + (1-w)*f_high*S with S evaluated at
// `load`. f_low/f_high are the per-material frictions at this load; the
// caller supplies them from characteristic curves or from
// capstan_friction_magnitude with mu_low/mu_high.
double switch_friction(double load, double friction_low, double friction_high,
                       const SwitchModelParams& params);

// switch_friction evaluated over `loads`, with the per-material frictions
// interpolated from the two characteristic curves. Every load must lie in
// both curves' domains; no silent extrapolation.
FrictionCurve switch_friction_curve(const std::vector<double>& loads,
                                    const FrictionCurve& low_curve,
                                    const FrictionCurve& high_curve,
                                    const SwitchModelParams& params);

// Per-material frictions synthesized from the capstan model instead of
// measured characteristic curves.
FrictionCurve capstan_characteristic_curve(const std::vector<double>& loads, double mu,
                                           double wrap_angle, const std::string& label);

} // namespace fswitch
