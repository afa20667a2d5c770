#pragma once

#include <string>
#include <vector>

namespace fswitch {

// One extracted friction measurement at a given tendon load.
struct FrictionSample {
    double load_force = 0.0;         // N, > 0
    double friction_magnitude = 0.0; // N, >= 0
    double sigma = 0.0;              // N, >= 0

    void validate() const;
};

// Friction-vs-load curve, strictly increasing in load.
struct FrictionCurve {
    std::vector<FrictionSample> samples;
    std::string label;

    void validate() const;

    double min_load() const;
    double max_load() const;

    // Piecewise-linear interpolation of friction at `load`.
    // Throws ExtrapolationError outside [min_load, max_load].
    double friction_at(double load) const;

    bool contains(double load) const;
};

} // namespace fswitch
