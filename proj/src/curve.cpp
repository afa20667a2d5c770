#include "fswitch/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fswitch/errors.hpp"

namespace fswitch {

void FrictionSample::validate() const {
    if (!(load_force > 0.0)) {
        throw std::domain_error("load_force must be > 0");
    }
    if (!(friction_magnitude >= 0.0)) {
        throw std::domain_error("friction_magnitude must be >= 0");
    }
    if (!(sigma >= 0.0)) {
        throw std::domain_error("sigma must be >= 0");
    }
}

void FrictionCurve::validate() const {
    for (const auto& s : samples) {
        s.validate();
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i - 1].load_force < samples[i].load_force)) {
            throw std::domain_error("curve loads must be strictly increasing");
        }
    }
}

double FrictionCurve::min_load() const {
    if (samples.empty()) {
        throw std::domain_error("empty curve has no load domain");
    }
    return samples.front().load_force;
}

double FrictionCurve::max_load() const {
    if (samples.empty()) {
        throw std::domain_error("empty curve has no load domain");
    }
    return samples.back().load_force;
}

bool FrictionCurve::contains(double load) const {
    return !samples.empty() && load >= min_load() && load <= max_load();
}

double FrictionCurve::friction_at(double load) const {
    if (samples.empty() || load < min_load() || load > max_load()) {
        throw ExtrapolationError("load " + std::to_string(load) +
                                 " N outside curve domain of '" + label + "'");
    }
    auto upper = std::lower_bound(samples.begin(), samples.end(), load,
                                  [](const FrictionSample& s, double value) {
                                      return s.load_force < value;
                                  });
    if (upper->load_force == load) {
        return upper->friction_magnitude;
    }
    const auto& hi = *upper;
    const auto& lo = *std::prev(upper);
    const double t = (load - lo.load_force) / (hi.load_force - lo.load_force);
    return lo.friction_magnitude + t * (hi.friction_magnitude - lo.friction_magnitude);
}

} // namespace fswitch
