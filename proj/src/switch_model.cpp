#include "fswitch/switch_model.hpp"

#include <cmath>
#include <stdexcept>

namespace fswitch {

namespace {
// ln(19): sigmoid is at 95% a distance of scale*ln(19) above its midpoint.
const double kLn19 = std::log(19.0);
} // namespace

void SwitchModelParams::validate() const {
    if (!(mu_low >= 0.0) || !(mu_low <= mu_high)) {
        throw std::domain_error("require 0 <= mu_low <= mu_high");
    }
    if (!(weight >= 0.0) || !(weight <= 0.5)) {
        throw std::domain_error("weight must lie in [0, 0.5]");
    }
    if (!(transition_range.lo < transition_range.hi)) {
        throw std::domain_error("transition_range must satisfy lo < hi");
    }
    CapstanContact{wrap_angle, mu_high}.validate();
}

double sigmoid_weight(double load, double threshold_force, double scale) {
    if (!(scale > 0.0)) {
        throw std::domain_error("sigmoid scale must be > 0");
    }
    return 1.0 / (1.0 + std::exp(-(load - threshold_force) / scale));
}

double transition_scale(const TransitionRange& range) {
    if (!(range.lo < range.hi)) {
        throw std::domain_error("degenerate transition range");
    }
    return (range.hi - range.lo) / (2.0 * kLn19);
}

double switch_friction(double load, double friction_low, double friction_high,
                       const SwitchModelParams& params) {
    if (!(load >= 0.0)) {
        throw std::domain_error("load must be >= 0");
    }
    if (!(friction_low >= 0.0) || !(friction_high >= 0.0)) {
        throw std::domain_error("material frictions must be >= 0");
    }
    params.validate();
    const double s =
        sigmoid_weight(load, params.threshold_force, transition_scale(params.transition_range));
    // lerp form of (1+w)*f_low*(1-S) + (1-w)*f_high*S; exact when the
    // weighted endpoints coincide
    const double low_end = (1.0 + params.weight) * friction_low;
    const double high_end = (1.0 - params.weight) * friction_high;
    return low_end + s * (high_end - low_end);
}

FrictionCurve switch_friction_curve(const std::vector<double>& loads,
                                    const FrictionCurve& low_curve,
                                    const FrictionCurve& high_curve,
                                    const SwitchModelParams& params) {
    FrictionCurve out;
    out.label = "model";
    out.samples.reserve(loads.size());
    for (double load : loads) {
        const double f_low = low_curve.friction_at(load);
        const double f_high = high_curve.friction_at(load);
        out.samples.push_back({load, switch_friction(load, f_low, f_high, params), 0.0});
    }
    out.validate();
    return out;
}

FrictionCurve capstan_characteristic_curve(const std::vector<double>& loads, double mu,
                                           double wrap_angle, const std::string& label) {
    const CapstanContact contact{wrap_angle, mu};
    FrictionCurve out;
    out.label = label;
    out.samples.reserve(loads.size());
    for (double load : loads) {
        out.samples.push_back({load, capstan_friction_magnitude(load, contact), 0.0});
    }
    out.validate();
    return out;
}

} // namespace fswitch
