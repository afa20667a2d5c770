#pragma once

#include <cstddef>
#include <vector>

#include "fswitch/curve.hpp"
#include "fswitch/rig.hpp"

namespace fswitch {

// One detected static-force plateau, samples [start_index, end_index).
struct PlateauSegment {
    std::size_t start_index = 0;
    std::size_t end_index = 0;
    Direction direction = Direction::Eccentric;
    double mean_force = 0.0;
    double std_force = 0.0;

    std::size_t sample_count() const { return end_index - start_index; }
};

// Aggregate of all plateaus of one direction at one load.
struct PhaseStats {
    Direction direction = Direction::Eccentric;
    double mean = 0.0; // F_e or F_c, N
    double std = 0.0;  // s_e or s_c, N
    int segment_count = 0;
};

inline constexpr double kDefaultMinDwellMs = 1000.0;
inline constexpr double kDefaultSlopeTolerance = 0.2; // N/s

// Detect static plateaus. When the trace carries dwell phase labels, the
// candidate regions are the dwell-labeled runs; otherwise maximal runs of
// samples whose local regression slope stays within slope_tolerance.
// Runs shorter than min_dwell are dropped. For unlabeled traces the
// direction comes from the run mean relative to the trace median.
std::vector<PlateauSegment> segment_plateaus(const ForceTrace& trace,
                                             double min_dwell_ms = kDefaultMinDwellMs,
                                             double slope_tolerance = kDefaultSlopeTolerance);

// Mean of segment means; std pooled over all member samples.
PhaseStats phase_stats(const std::vector<PlateauSegment>& segments, Direction direction);

// F_fr = |(F_e - F_c)/2|, s_fr = (s_e + s_c)/2.
FrictionSample extract_friction(const PhaseStats& eccentric, const PhaseStats& concentric,
                                double load);

// Whole chain over a set of traces covering >= 2 loads, both directions per
// load. One FrictionSample per load, ordered by load force.
FrictionCurve build_friction_curve(const std::vector<ForceTrace>& traces, const RigConfig& rig,
                                   double min_dwell_ms = kDefaultMinDwellMs,
                                   double slope_tolerance = kDefaultSlopeTolerance);

} // namespace fswitch
