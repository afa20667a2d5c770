#include "fswitch/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Box-Muller on raw mt19937_64 draws. std::normal_distribution is
// implementation-defined, which would break byte-identical traces across
// standard libraries.
class GaussianNoise {
public:
    explicit GaussianNoise(std::uint64_t seed) : rng_(seed) {}

    double next(double sigma) {
        if (sigma == 0.0) {
            return 0.0;
        }
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return sigma * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_ordinal) {
    std::uint64_t state = master_seed ^ (trial_ordinal * 0xD1B54A32D192ED03ULL);
    splitmix64(state);
    return splitmix64(state);
}

ForceTrace simulate_trial(const RigConfig& rig, const LoadCase& load_case,
                          const FrictionModel& friction_model, const NoiseModel& noise,
                          Direction direction, int repetitions, std::uint64_t seed) {
    rig.validate();
    load_case.validate();
    noise.validate(rig);
    if (repetitions < 1) {
        throw std::domain_error("repetitions must be >= 1");
    }

    const double f_load = load_force(load_case, rig);
    const double f_friction = friction_model(f_load);
    const double plateau =
        direction == Direction::Eccentric ? f_load - f_friction : f_load + f_friction;

    const double dt = 1.0 / rig.sample_rate_hz;
    const double cycle_s = (rig.on_duration_ms + rig.off_duration_ms) / 1000.0;
    const auto per_cycle = static_cast<std::size_t>(std::llround(cycle_s * rig.sample_rate_hz));
    const std::size_t n = per_cycle * static_cast<std::size_t>(repetitions);

    const double on_s = rig.on_duration_ms / 1000.0;
    const double settle_end_s = (rig.on_duration_ms + noise.settle_time_ms) / 1000.0;
    const Phase dwell_phase =
        direction == Direction::Eccentric ? Phase::EccentricDwell : Phase::ConcentricDwell;

    // Open-loop position advance per ON burst; nothing downstream depends on
    // position, it is carried for format fidelity.
    const double advance_mm = load_case.speed_percent / 100.0 * 50.0 * on_s;
    const double start_mm = direction == Direction::Eccentric ? 0.0 : rig.actuator_stroke_mm;
    const double move_sign = direction == Direction::Eccentric ? 1.0 : -1.0;

    GaussianNoise gauss(seed);
    ForceTrace trace;
    trace.timestamps.resize(n);
    trace.forces.resize(n);
    trace.positions.resize(n);
    trace.phases.resize(n);
    trace.load_case = load_case;
    trace.seed = seed;

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t cycle = k / per_cycle;
        const double tau = static_cast<double>(k % per_cycle) * dt;

        Phase phase;
        double progressed;
        if (tau < on_s) {
            phase = Phase::Moving;
            progressed = static_cast<double>(cycle) + tau / on_s;
        } else {
            phase = tau < settle_end_s ? Phase::Settling : dwell_phase;
            progressed = static_cast<double>(cycle) + 1.0;
        }

        const double pos = start_mm + move_sign * advance_mm * progressed;
        trace.timestamps[k] = static_cast<double>(k) * dt;
        trace.forces[k] = plateau + gauss.next(noise.force_sigma);
        trace.positions[k] = std::clamp(pos, 0.0, rig.actuator_stroke_mm);
        trace.phases[k] = phase;
    }
    return trace;
}

std::vector<ForceTrace> simulate_experiment(const RigConfig& rig,
                                            const std::vector<LoadCase>& loads,
                                            const FrictionModel& friction_model,
                                            const NoiseModel& noise, std::uint64_t master_seed) {
    if (loads.empty()) {
        throw std::domain_error("need at least one load case");
    }
    std::vector<ForceTrace> traces;
    traces.reserve(loads.size() * 2);
    for (std::size_t i = 0; i < loads.size(); ++i) {
        traces.push_back(simulate_trial(rig, loads[i], friction_model, noise,
                                        Direction::Eccentric, kEccentricRepetitions,
                                        derive_seed(master_seed, 2 * i)));
        traces.push_back(simulate_trial(rig, loads[i], friction_model, noise,
                                        Direction::Concentric, kConcentricRepetitions,
                                        derive_seed(master_seed, 2 * i + 1)));
    }
    return traces;
}

Direction trace_direction(const ForceTrace& trace) {
    for (Phase p : trace.phases) {
        if (p == Phase::EccentricDwell) {
            return Direction::Eccentric;
        }
        if (p == Phase::ConcentricDwell) {
            return Direction::Concentric;
        }
    }
    throw DataError("trace carries no dwell phase labels");
}

} // namespace fswitch
