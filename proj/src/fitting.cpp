#include "fswitch/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

constexpr double kTiny = 1e-12;

struct ParameterSpace {
    SwitchModelParams base;
    std::vector<FitParameter> free;
    std::vector<ParameterBounds> bounds;

    SwitchModelParams to_params(const std::vector<double>& x) const {
        SwitchModelParams p = base;
        for (std::size_t i = 0; i < free.size(); ++i) {
            switch (free[i]) {
            case FitParameter::Threshold:
                p.threshold_force = x[i];
                break;
            case FitParameter::Width:
                p.transition_range = {base.transition_range.lo,
                                      base.transition_range.lo + x[i]};
                break;
            case FitParameter::Weight:
                p.weight = x[i];
                break;
            }
        }
        return p;
    }

    std::vector<double> clamp(std::vector<double> x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], bounds[i].lo, bounds[i].hi);
        }
        return x;
    }
};

double sum_squares(const std::vector<double>& r) {
    return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
}

struct NelderMeadOutcome {
    std::vector<double> best_x;
    double best_f = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Standard reflect/expand/contract/shrink simplex with candidates clamped
// into the bound box. The best vertex never worsens.
NelderMeadOutcome nelder_mead(const ParameterSpace& space,
                              const std::function<double(const std::vector<double>&)>& objective,
                              std::vector<double> x0, double initial_step_fraction,
                              int max_iterations, double tolerance) {
    const std::size_t n = x0.size();
    x0 = space.clamp(std::move(x0));

    std::vector<std::vector<double>> xs(n + 1, x0);
    for (std::size_t j = 0; j < n; ++j) {
        const double step = initial_step_fraction * (space.bounds[j].hi - space.bounds[j].lo);
        double moved = x0[j] + step;
        if (moved > space.bounds[j].hi) {
            moved = x0[j] - step;
        }
        xs[j + 1][j] = std::max(moved, space.bounds[j].lo);
    }
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fs[i] = objective(xs[i]);
    }

    NelderMeadOutcome out;
    std::vector<std::size_t> order(n + 1);
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();

        const double f_rel = 2.0 * std::fabs(fs[worst] - fs[best]) /
                             (std::fabs(fs[worst]) + std::fabs(fs[best]) + kTiny);
        double x_rel = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double lo = xs[0][j];
            double hi = xs[0][j];
            for (std::size_t i = 1; i <= n; ++i) {
                lo = std::min(lo, xs[i][j]);
                hi = std::max(hi, xs[i][j]);
            }
            x_rel = std::max(x_rel, (hi - lo) / std::max(1.0, std::fabs(xs[best][j])));
        }
        if (f_rel < tolerance || x_rel < 1e-11) {
            out.converged = true;
            out.iterations = iter;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += xs[i][j];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(n);
        }

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = centroid[j] + coeff * (centroid[j] - xs[worst][j]);
            }
            return space.clamp(std::move(x));
        };

        const auto reflected = blend(1.0);
        const double f_reflected = objective(reflected);
        if (f_reflected < fs[order[0]]) {
            const auto expanded = blend(2.0);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                xs[worst] = expanded;
                fs[worst] = f_expanded;
            } else {
                xs[worst] = reflected;
                fs[worst] = f_reflected;
            }
        } else if (f_reflected < fs[order[n - 1]]) {
            xs[worst] = reflected;
            fs[worst] = f_reflected;
        } else {
            const bool outside = f_reflected < fs[worst];
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double f_contracted = objective(contracted);
            if (f_contracted < std::min(f_reflected, fs[worst])) {
                xs[worst] = contracted;
                fs[worst] = f_contracted;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) {
                        continue;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        xs[i][j] = xs[best][j] + 0.5 * (xs[i][j] - xs[best][j]);
                    }
                    fs[i] = objective(xs[i]);
                }
            }
        }
        out.iterations = iter + 1;
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (fs[i] < fs[best]) {
            best = i;
        }
    }
    out.best_x = xs[best];
    out.best_f = fs[best];
    return out;
}

} // namespace

bool FitProblem::is_free(FitParameter p) const {
    return std::find(free_parameters.begin(), free_parameters.end(), p) !=
           free_parameters.end();
}

void FitProblem::validate() const {
    device_curve.validate();
    low_curve.validate();
    high_curve.validate();
    if (device_curve.samples.size() < 2) {
        throw std::domain_error("device curve needs >= 2 samples");
    }
    for (std::size_t i = 0; i < free_parameters.size(); ++i) {
        for (std::size_t j = i + 1; j < free_parameters.size(); ++j) {
            if (free_parameters[i] == free_parameters[j]) {
                throw std::domain_error("duplicate free parameter");
            }
        }
    }
    for (const auto& b : {threshold_bounds, width_bounds, weight_bounds}) {
        if (!(b.lo < b.hi)) {
            throw std::domain_error("parameter bounds must satisfy lo < hi");
        }
    }
    if (weight_bounds.lo < 0.0 || weight_bounds.hi > 0.5) {
        throw std::domain_error("weight bounds must lie within [0, 0.5]");
    }
    if (is_free(FitParameter::Width) && !(width_bounds.lo > 0.0)) {
        throw std::domain_error("width bounds must be positive");
    }
}

std::vector<double> residuals(const SwitchModelParams& params, const FitProblem& problem) {
    std::vector<double> loads;
    loads.reserve(problem.device_curve.samples.size());
    for (const auto& s : problem.device_curve.samples) {
        if (!problem.low_curve.contains(s.load_force) ||
            !problem.high_curve.contains(s.load_force)) {
            throw ExtrapolationError("device load " + std::to_string(s.load_force) +
                                     " N outside characteristic-curve domain");
        }
        loads.push_back(s.load_force);
    }
    const FrictionCurve model =
        switch_friction_curve(loads, problem.low_curve, problem.high_curve, params);

    bool all_sigmas_positive = true;
    for (const auto& s : problem.device_curve.samples) {
        all_sigmas_positive = all_sigmas_positive && s.sigma > 0.0;
    }
    const bool weighted = problem.weight_by_sigma && all_sigmas_positive;

    std::vector<double> out(loads.size());
    for (std::size_t i = 0; i < loads.size(); ++i) {
        const auto& measured = problem.device_curve.samples[i];
        out[i] = model.samples[i].friction_magnitude - measured.friction_magnitude;
        if (weighted) {
            out[i] /= measured.sigma;
        }
    }
    return out;
}

FitResult fit_switch_model(const FitProblem& problem, const SwitchModelParams& initial,
                           int max_iterations, double tolerance) {
    const std::size_t n_free = problem.free_parameters.size();
    const std::size_t needed = std::max<std::size_t>(3, n_free + 1);
    if (problem.device_curve.samples.size() < needed) {
        throw FitError("under-determined fit: " +
                       std::to_string(problem.device_curve.samples.size()) + " samples for " +
                       std::to_string(n_free) + " free parameters");
    }
    problem.validate();
    initial.validate();

    ParameterSpace space;
    space.base = initial;
    space.free = problem.free_parameters;
    for (FitParameter p : space.free) {
        switch (p) {
        case FitParameter::Threshold:
            space.bounds.push_back(problem.threshold_bounds);
            break;
        case FitParameter::Width:
            space.bounds.push_back(problem.width_bounds);
            break;
        case FitParameter::Weight:
            space.bounds.push_back(problem.weight_bounds);
            break;
        }
    }

    FitResult result;
    if (n_free == 0) {
        result.params = initial;
        result.iterations = 0;
        result.converged = true;
        std::tie(result.rmse, result.r_squared) = fit_quality(result, problem);
        return result;
    }

    const auto objective = [&](const std::vector<double>& x) {
        return sum_squares(residuals(space.to_params(x), problem));
    };

    std::vector<double> x0(n_free);
    for (std::size_t i = 0; i < n_free; ++i) {
        switch (space.free[i]) {
        case FitParameter::Threshold:
            x0[i] = initial.threshold_force;
            break;
        case FitParameter::Width:
            x0[i] = initial.transition_width();
            break;
        case FitParameter::Weight:
            x0[i] = initial.weight;
            break;
        }
    }

    auto run = nelder_mead(space, objective, x0, 0.05, max_iterations, tolerance);
    if (run.converged) {
        // One tight restart from the found minimum guards against a simplex
        // that collapsed along a sloppy direction.
        auto polish =
            nelder_mead(space, objective, run.best_x, 0.01, max_iterations, tolerance);
        polish.iterations += run.iterations;
        if (polish.best_f <= run.best_f) {
            run = polish;
        }
    }

    result.params = space.to_params(run.best_x);
    result.iterations = run.iterations;
    result.converged = run.converged;
    std::tie(result.rmse, result.r_squared) = fit_quality(result, problem);
    return result;
}

std::pair<double, double> fit_quality(const FitResult& result, const FitProblem& problem) {
    const auto& device = problem.device_curve.samples;
    if (device.size() < 2) {
        throw FitError("r_squared undefined for fewer than 2 samples");
    }
    FitProblem unweighted = problem;
    unweighted.weight_by_sigma = false;
    const std::vector<double> r = residuals(result.params, unweighted);
    const double ss_res = sum_squares(r);
    const double rmse = std::sqrt(ss_res / static_cast<double>(r.size()));

    double mean = 0.0;
    for (const auto& s : device) {
        mean += s.friction_magnitude;
    }
    mean /= static_cast<double>(device.size());
    double ss_tot = 0.0;
    for (const auto& s : device) {
        const double d = s.friction_magnitude - mean;
        ss_tot += d * d;
    }
    const double r_squared =
        ss_tot > 1e-30 ? 1.0 - ss_res / ss_tot : (ss_res < 1e-30 ? 1.0 : 0.0);
    return {rmse, r_squared};
}

} // namespace fswitch
