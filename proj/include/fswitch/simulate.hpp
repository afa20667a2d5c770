#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fswitch/rig.hpp"

namespace fswitch {

// Friction magnitude as a function of tendon load, N -> N.
using FrictionModel = std::function<double(double)>;

inline constexpr int kEccentricRepetitions = 13;
inline constexpr int kConcentricRepetitions = 30;

// Stateless seed derivation so every trial gets an independent stream.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_ordinal);

// One open-loop trial: `repetitions` duty cycles of on_duration moving +
// off_duration at rest. After settle_time the dwell force plateau is
// F_l - F_fr (eccentric) or F_l + F_fr (concentric); zero-mean Gaussian
// noise with force_sigma is added to every sample. Deterministic per seed.
ForceTrace simulate_trial(const RigConfig& rig, const LoadCase& load_case,
                          const FrictionModel& friction_model, const NoiseModel& noise,
                          Direction direction, int repetitions, std::uint64_t seed);

// One eccentric (13 reps) and one concentric (30 reps) trace per load,
// with per-trial seeds derived from the master seed.
std::vector<ForceTrace> simulate_experiment(const RigConfig& rig,
                                            const std::vector<LoadCase>& loads,
                                            const FrictionModel& friction_model,
                                            const NoiseModel& noise, std::uint64_t master_seed);

// Direction of a simulated trace's dwell phases; throws if the trace has no
// dwell-labeled samples.
Direction trace_direction(const ForceTrace& trace);

} // namespace fswitch
