#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fswitch/errors.hpp"
#include "fswitch/switch_model.hpp"

using namespace fswitch;

namespace {

FrictionCurve linear_curve(double slope, double lo, double hi, int n, const char* label) {
    FrictionCurve curve;
    curve.label = label;
    for (int i = 0; i < n; ++i) {
        const double load = lo + (hi - lo) * i / (n - 1);
        curve.samples.push_back({load, slope * load, 0.0});
    }
    return curve;
}

} // namespace

TEST_CASE("sigmoid midpoint and analytic 5%/95% identities") {
    const double ln19 = std::log(19.0);
    for (double thr : {0.0, 4.3, 5.7, -2.0}) {
        for (double scale : {0.1, 0.9339639977, 3.0}) {
            CHECK(sigmoid_weight(thr, thr, scale) == doctest::Approx(0.5).epsilon(1e-15));
            CHECK(sigmoid_weight(thr + scale * ln19, thr, scale) ==
                  doctest::Approx(0.95).epsilon(1e-12));
            CHECK(sigmoid_weight(thr - scale * ln19, thr, scale) ==
                  doctest::Approx(0.05).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(sigmoid_weight(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sigmoid_weight(1.0, 0.0, -1.0), std::domain_error);
}

TEST_CASE("sigmoid monotonicity and point symmetry about the threshold") {
    std::mt19937 rng(811);
    std::uniform_real_distribution<double> thr_dist(-10.0, 10.0);
    std::uniform_real_distribution<double> scale_dist(0.05, 5.0);
    // keep the argument within +-25 scales: beyond that the sigmoid is
    // saturated at double precision and strictness is not representable
    std::uniform_real_distribution<double> u_dist(-25.0, 25.0);
    for (int i = 0; i < 1000; ++i) {
        const double thr = thr_dist(rng);
        const double scale = scale_dist(rng);
        const double x = thr + scale * u_dist(rng);
        const double s = sigmoid_weight(x, thr, scale);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
        CHECK(sigmoid_weight(2.0 * thr - x, thr, scale) ==
              doctest::Approx(1.0 - s).epsilon(1e-9));
        CHECK(sigmoid_weight(x + 1e-3 * scale, thr, scale) > s);
    }
}

TEST_CASE("transition scale, frozen values") {
    // width 5.5 N / (2 ln 19) = 0.9339639977
    CHECK(transition_scale({0.0, 5.5}) == doctest::Approx(0.9339639977).epsilon(1e-9));
    CHECK(transition_scale({-2.0, 3.5}) == doctest::Approx(0.9339639977).epsilon(1e-9));
    CHECK(transition_scale({0.0, 2.0 * std::log(19.0)}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(transition_scale({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(transition_scale({2.0, 1.0}), std::domain_error);
}

TEST_CASE("switch friction at the midpoint and in saturation") {
    SwitchModelParams params{0.05, 0.24, 0.1, 4.3, {0.0, 5.5}, deg_to_rad(63.89)};
    // S = 0.5: 0.5*(1.1*2) + 0.5*(0.9*10)
    CHECK(switch_friction(4.3, 2.0, 10.0, params) == doctest::Approx(5.6).epsilon(1e-12));

    const double scale = transition_scale(params.transition_range);
    CHECK(switch_friction(4.3 + 10.0 * scale, 2.0, 10.0, params) ==
          doctest::Approx(8.999691294).epsilon(1e-8)); // (1-w)*10 minus e^-10 residual
}

TEST_CASE("switch friction degenerate blend w=0, equal materials") {
    SwitchModelParams params{0.2, 0.2, 0.0, 4.3, {0.0, 5.5}, deg_to_rad(63.89)};
    std::mt19937 rng(812);
    std::uniform_real_distribution<double> load_dist(0.0, 60.0);
    std::uniform_real_distribution<double> c_dist(0.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double c = c_dist(rng);
        CHECK(switch_friction(load_dist(rng), c, c, params) ==
              doctest::Approx(c).epsilon(1e-15));
    }
}

TEST_CASE("switch friction stays inside the weighted endpoint bracket") {
    std::mt19937 rng(813);
    std::uniform_real_distribution<double> load_dist(0.0, 60.0);
    std::uniform_real_distribution<double> f_dist(0.0, 20.0);
    std::uniform_real_distribution<double> w_dist(0.0, 0.5);
    std::uniform_real_distribution<double> thr_dist(0.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        SwitchModelParams params{0.05, 0.24, w_dist(rng), thr_dist(rng), {0.0, 5.5},
                                 deg_to_rad(63.89)};
        const double f_low = f_dist(rng);
        const double f_high = f_dist(rng);
        const double lo_end = (1.0 + params.weight) * f_low;
        const double hi_end = (1.0 - params.weight) * f_high;
        const double value = switch_friction(load_dist(rng), f_low, f_high, params);
        CHECK(value >= std::min(lo_end, hi_end) - 1e-12);
        CHECK(value <= std::max(lo_end, hi_end) + 1e-12);
    }
}

TEST_CASE("switch friction curve saturates onto the branch curves") {
    const auto low = linear_curve(0.06, 1.0, 50.0, 25, "pins");
    const auto high = linear_curve(0.27, 1.0, 50.0, 25, "silicone");
    std::vector<double> loads;
    for (const auto& s : low.samples) {
        loads.push_back(s.load_force);
    }

    SwitchModelParams params{0.05, 0.24, 0.0, 0.0, {0.0, 5.5}, deg_to_rad(63.89)};
    const double scale = transition_scale(params.transition_range);

    // threshold far below the domain: fully on the high branch, (1-w) factor
    params.threshold_force = loads.front() - 20.0 * scale;
    params.weight = 0.1;
    auto saturated_high = switch_friction_curve(loads, low, high, params);
    for (std::size_t i = 0; i < loads.size(); ++i) {
        CHECK(saturated_high.samples[i].friction_magnitude ==
              doctest::Approx(0.9 * high.samples[i].friction_magnitude).epsilon(1e-6));
    }

    // threshold far above the domain with w=0: the low branch itself
    params.threshold_force = loads.back() + 20.0 * scale;
    params.weight = 0.0;
    auto saturated_low = switch_friction_curve(loads, low, high, params);
    for (std::size_t i = 0; i < loads.size(); ++i) {
        CHECK(saturated_low.samples[i].friction_magnitude ==
              doctest::Approx(low.samples[i].friction_magnitude).epsilon(1e-6));
    }
}

TEST_CASE("switch friction curve crosses branches near the threshold") {
    const auto low = linear_curve(0.06, 0.5, 50.0, 100, "pins");
    const auto high = linear_curve(0.27, 0.5, 50.0, 100, "silicone");
    std::vector<double> loads;
    for (const auto& s : low.samples) {
        loads.push_back(s.load_force);
    }
    SwitchModelParams params{0.05, 0.24, 0.1, 4.3, {0.0, 5.5}, deg_to_rad(63.89)};
    const auto model = switch_friction_curve(loads, low, high, params);

    // near the low branch well below threshold, near (1-w)*high well above
    CHECK(model.samples.front().friction_magnitude ==
          doctest::Approx((1.0 + 0.1) * low.samples.front().friction_magnitude)
              .epsilon(0.10));
    CHECK(model.samples.back().friction_magnitude ==
          doctest::Approx(0.9 * high.samples.back().friction_magnitude).epsilon(1e-6));

    // monotone in load for monotone branches with f_high >= f_low
    for (std::size_t i = 1; i < model.samples.size(); ++i) {
        CHECK(model.samples[i].friction_magnitude >
              model.samples[i - 1].friction_magnitude);
    }
}

TEST_CASE("switch friction curve refuses extrapolation") {
    const auto low = linear_curve(0.06, 1.0, 50.0, 25, "pins");
    const auto high = linear_curve(0.27, 2.0, 50.0, 25, "silicone");
    SwitchModelParams params{0.05, 0.24, 0.1, 4.3, {0.0, 5.5}, deg_to_rad(63.89)};
    CHECK_THROWS_AS(switch_friction_curve({1.5}, low, high, params), ExtrapolationError);
    CHECK_THROWS_AS(switch_friction_curve({55.0}, low, high, params), ExtrapolationError);
    CHECK_NOTHROW(switch_friction_curve({2.0, 50.0}, low, high, params));
}

TEST_CASE("switch model parameter validation") {
    CHECK_THROWS_AS(
        (SwitchModelParams{0.3, 0.2, 0.1, 4.3, {0.0, 5.5}, 1.0}).validate(),
        std::domain_error); // mu_low > mu_high
    CHECK_THROWS_AS(
        (SwitchModelParams{0.05, 0.24, 0.6, 4.3, {0.0, 5.5}, 1.0}).validate(),
        std::domain_error); // w > 0.5
    CHECK_THROWS_AS(
        (SwitchModelParams{0.05, 0.24, 0.1, 4.3, {5.5, 0.0}, 1.0}).validate(),
        std::domain_error); // inverted range
    // F_thr outside the transition range is allowed (six-pin fit)
    CHECK_NOTHROW((SwitchModelParams{0.05, 0.24, 0.2, 5.7, {-2.0, 3.5}, 1.0}).validate());
}
