#include "fswitch/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

bool is_dwell(Phase p) {
    return p == Phase::EccentricDwell || p == Phase::ConcentricDwell;
}

double sample_rate_of(const ForceTrace& trace) {
    const std::size_t n = trace.timestamps.size();
    if (n < 2) {
        throw DataError("trace too short to segment");
    }
    const double dt = (trace.timestamps.back() - trace.timestamps.front()) /
                      static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        if (std::fabs(trace.timestamps[i] - trace.timestamps[i - 1] - dt) > 1e-3 * dt) {
            throw DataError("non-uniform trace timestamps");
        }
    }
    return 1.0 / dt;
}

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& values, std::size_t begin, std::size_t end) {
    const auto n = static_cast<double>(end - begin);
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        sum += values[i];
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double d = values[i] - mean;
        ss += d * d;
    }
    return {mean, n > 1.0 ? std::sqrt(ss / (n - 1.0)) : 0.0};
}

// OLS slope of force vs time over [begin, end).
double regression_slope(const ForceTrace& trace, std::size_t begin, std::size_t end) {
    const auto n = static_cast<double>(end - begin);
    if (n < 2.0) {
        return 0.0;
    }
    double t_mean = 0.0;
    double f_mean = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        t_mean += trace.timestamps[i];
        f_mean += trace.forces[i];
    }
    t_mean /= n;
    f_mean /= n;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double dt = trace.timestamps[i] - t_mean;
        num += dt * (trace.forces[i] - f_mean);
        den += dt * dt;
    }
    return den > 0.0 ? num / den : 0.0;
}

PlateauSegment make_segment(const ForceTrace& trace, std::size_t begin, std::size_t end,
                            Direction direction) {
    const MeanStd ms = mean_std(trace.forces, begin, end);
    return {begin, end, direction, ms.mean, ms.std};
}

std::vector<PlateauSegment> segments_from_labels(const ForceTrace& trace,
                                                 std::size_t min_samples,
                                                 double slope_tolerance) {
    std::vector<PlateauSegment> out;
    const std::size_t n = trace.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_dwell(trace.phases[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < n && trace.phases[j] == trace.phases[i]) {
            ++j;
        }
        if (j - i >= min_samples &&
            std::fabs(regression_slope(trace, i, j)) <= slope_tolerance) {
            const Direction dir = trace.phases[i] == Phase::EccentricDwell
                                      ? Direction::Eccentric
                                      : Direction::Concentric;
            out.push_back(make_segment(trace, i, j, dir));
        }
        i = j;
    }
    return out;
}

std::vector<PlateauSegment> segments_from_slopes(const ForceTrace& trace,
                                                 std::size_t min_samples,
                                                 double slope_tolerance) {
    const std::size_t n = trace.size();
    // Local slope over a centered window half the minimum dwell, or the
    // whole trace when shorter.
    std::size_t window = std::max<std::size_t>(3, min_samples / 2);
    window = std::min(window, n);
    const std::size_t half = window / 2;

    std::vector<bool> flat(n, false);
    for (std::size_t c = half; c + (window - half) <= n; ++c) {
        const double slope = regression_slope(trace, c - half, c - half + window);
        flat[c] = std::fabs(slope) <= slope_tolerance;
    }

    std::vector<double> sorted = trace.forces;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    std::vector<PlateauSegment> out;
    std::size_t i = 0;
    while (i < n) {
        if (!flat[i]) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < n && flat[j]) {
            ++j;
        }
        if (j - i >= min_samples) {
            const MeanStd ms = mean_std(trace.forces, i, j);
            const Direction dir =
                ms.mean > median ? Direction::Concentric : Direction::Eccentric;
            out.push_back({i, j, dir, ms.mean, ms.std});
        }
        i = j;
    }
    return out;
}

} // namespace

std::vector<PlateauSegment> segment_plateaus(const ForceTrace& trace, double min_dwell_ms,
                                             double slope_tolerance) {
    trace.validate();
    if (trace.size() == 0) {
        throw DataError("empty trace");
    }
    if (!(min_dwell_ms > 0.0)) {
        throw std::domain_error("min_dwell must be > 0");
    }
    const double rate = sample_rate_of(trace);
    const auto min_samples =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(min_dwell_ms / 1000.0 * rate)));

    const bool labeled = std::any_of(trace.phases.begin(), trace.phases.end(), is_dwell);
    return labeled ? segments_from_labels(trace, min_samples, slope_tolerance)
                   : segments_from_slopes(trace, min_samples, slope_tolerance);
}

PhaseStats phase_stats(const std::vector<PlateauSegment>& segments, Direction direction) {
    double mean_sum = 0.0;
    double pooled_ss = 0.0;
    double pooled_dof = 0.0;
    int count = 0;
    for (const auto& seg : segments) {
        if (seg.direction != direction) {
            continue;
        }
        mean_sum += seg.mean_force;
        const auto n = static_cast<double>(seg.sample_count());
        pooled_ss += (n - 1.0) * seg.std_force * seg.std_force;
        pooled_dof += n - 1.0;
        ++count;
    }
    if (count == 0) {
        throw DataError("no plateau segments of the requested direction");
    }
    PhaseStats stats;
    stats.direction = direction;
    stats.mean = mean_sum / count;
    stats.std = pooled_dof > 0.0 ? std::sqrt(pooled_ss / pooled_dof) : 0.0;
    stats.segment_count = count;
    return stats;
}

FrictionSample extract_friction(const PhaseStats& eccentric, const PhaseStats& concentric,
                                double load) {
    if (!(load > 0.0)) {
        throw std::domain_error("load must be > 0");
    }
    FrictionSample sample;
    sample.load_force = load;
    sample.friction_magnitude = std::fabs(eccentric.mean - concentric.mean) / 2.0;
    sample.sigma = (eccentric.std + concentric.std) / 2.0;
    return sample;
}

FrictionCurve build_friction_curve(const std::vector<ForceTrace>& traces, const RigConfig& rig,
                                   double min_dwell_ms, double slope_tolerance) {
    // Group traces by load mass; masses come from a shared load table, so
    // keying on the rounded value is exact.
    std::map<long long, std::vector<const ForceTrace*>> by_mass;
    for (const auto& trace : traces) {
        by_mass[std::llround(trace.load_case.mass_kg * 1e9)].push_back(&trace);
    }
    if (by_mass.size() < 2) {
        throw DataError("need traces for at least 2 distinct loads");
    }

    FrictionCurve curve;
    curve.label = "extracted";
    for (const auto& [key, group] : by_mass) {
        std::vector<PlateauSegment> segments;
        for (const ForceTrace* trace : group) {
            auto segs = segment_plateaus(*trace, min_dwell_ms, slope_tolerance);
            segments.insert(segments.end(), segs.begin(), segs.end());
        }
        const double load = load_force(group.front()->load_case, rig);
        PhaseStats ecc;
        PhaseStats conc;
        try {
            ecc = phase_stats(segments, Direction::Eccentric);
            conc = phase_stats(segments, Direction::Concentric);
        } catch (const DataError&) {
            throw DataError("missing direction for load " + std::to_string(load) + " N");
        }
        curve.samples.push_back(extract_friction(ecc, conc, load));
    }
    std::sort(curve.samples.begin(), curve.samples.end(),
              [](const FrictionSample& a, const FrictionSample& b) {
                  return a.load_force < b.load_force;
              });
    curve.validate();
    return curve;
}

} // namespace fswitch
