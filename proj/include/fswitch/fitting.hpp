#pragma once

#include <utility>
#include <vector>

#include "fswitch/curve.hpp"
#include "fswitch/switch_model.hpp"

namespace fswitch {

enum class FitParameter { Threshold, Width, Weight };

struct ParameterBounds {
    double lo = 0.0;
    double hi = 0.0;
};

// Least-squares problem: device curve to explain, the two characteristic
// curves to blend, which parameters move, and where they may move.
struct FitProblem {
    FrictionCurve device_curve;
    FrictionCurve low_curve;
    FrictionCurve high_curve;
    std::vector<FitParameter> free_parameters{FitParameter::Threshold, FitParameter::Width,
                                              FitParameter::Weight};
    ParameterBounds threshold_bounds{0.0, 60.0};
    ParameterBounds width_bounds{0.1, 60.0};
    ParameterBounds weight_bounds{0.0, 0.5};
    bool weight_by_sigma = false; // residuals scaled by 1/sigma when all sigmas > 0

    void validate() const;
    bool is_free(FitParameter p) const;
};

struct FitResult {
    SwitchModelParams params{};
    double rmse = 0.0;
    double r_squared = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Per-sample (model - measured) friction at the device loads.
std::vector<double> residuals(const SwitchModelParams& params, const FitProblem& problem);

// Bounded Nelder-Mead descent over the free parameters, starting from
// `initial`. Deterministic; converged=false (not a throw) when the simplex
// fails to settle within max_iterations.
FitResult fit_switch_model(const FitProblem& problem, const SwitchModelParams& initial,
                           int max_iterations = 2000, double tolerance = 1e-12);

// Unweighted rmse over the device samples and r^2 about the device mean.
std::pair<double, double> fit_quality(const FitResult& result, const FitProblem& problem);

} // namespace fswitch
