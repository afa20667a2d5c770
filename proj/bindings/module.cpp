#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fswitch/capstan.hpp"
#include "fswitch/config.hpp"
#include "fswitch/csv_io.hpp"
#include "fswitch/errors.hpp"
#include "fswitch/fitting.hpp"
#include "fswitch/geometry.hpp"
#include "fswitch/pipeline.hpp"
#include "fswitch/simulate.hpp"
#include "fswitch/svg_plot.hpp"
#include "fswitch/switch_model.hpp"

namespace py = pybind11;
using namespace fswitch;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Adaptive friction pulley toolkit: capstan model, switch model, rig "
              "simulation, friction extraction, and parameter fitting";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

    py::enum_<Direction>(m, "Direction")
        .value("ECCENTRIC", Direction::Eccentric)
        .value("CONCENTRIC", Direction::Concentric);

    py::enum_<Phase>(m, "Phase")
        .value("ECCENTRIC_DWELL", Phase::EccentricDwell)
        .value("CONCENTRIC_DWELL", Phase::ConcentricDwell)
        .value("MOVING", Phase::Moving)
        .value("SETTLING", Phase::Settling)
        .value("UNKNOWN", Phase::Unknown);

    py::enum_<FitParameter>(m, "FitParameter")
        .value("THRESHOLD", FitParameter::Threshold)
        .value("WIDTH", FitParameter::Width)
        .value("WEIGHT", FitParameter::Weight);

    py::class_<CapstanContact>(m, "CapstanContact")
        .def(py::init<double, double>(), py::arg("wrap_angle"),
             py::arg("friction_coefficient"))
        .def_readwrite("wrap_angle", &CapstanContact::wrap_angle)
        .def_readwrite("friction_coefficient", &CapstanContact::friction_coefficient)
        .def("__repr__", [](const CapstanContact& c) {
            return "CapstanContact(wrap_angle=" + format_double(c.wrap_angle) +
                   ", friction_coefficient=" + format_double(c.friction_coefficient) + ")";
        });

    py::class_<TransitionRange>(m, "TransitionRange")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &TransitionRange::lo)
        .def_readwrite("hi", &TransitionRange::hi);

    py::class_<SwitchModelParams>(m, "SwitchModelParams")
        .def(py::init<double, double, double, double, TransitionRange, double>(),
             py::arg("mu_low") = 0.05, py::arg("mu_high") = 0.24, py::arg("weight") = 0.0,
             py::arg("threshold_force") = 0.0,
             py::arg("transition_range") = TransitionRange{0.0, 1.0},
             py::arg("wrap_angle") = deg_to_rad(63.89))
        .def_readwrite("mu_low", &SwitchModelParams::mu_low)
        .def_readwrite("mu_high", &SwitchModelParams::mu_high)
        .def_readwrite("weight", &SwitchModelParams::weight)
        .def_readwrite("threshold_force", &SwitchModelParams::threshold_force)
        .def_readwrite("transition_range", &SwitchModelParams::transition_range)
        .def_readwrite("wrap_angle", &SwitchModelParams::wrap_angle)
        .def("transition_width", &SwitchModelParams::transition_width)
        .def("validate", &SwitchModelParams::validate);

    py::class_<FrictionSample>(m, "FrictionSample")
        .def(py::init<double, double, double>(), py::arg("load_force"),
             py::arg("friction_magnitude"), py::arg("sigma") = 0.0)
        .def_readwrite("load_force", &FrictionSample::load_force)
        .def_readwrite("friction_magnitude", &FrictionSample::friction_magnitude)
        .def_readwrite("sigma", &FrictionSample::sigma);

    py::class_<FrictionCurve>(m, "FrictionCurve")
        .def(py::init<>())
        .def(py::init<std::vector<FrictionSample>, std::string>(), py::arg("samples"),
             py::arg("label") = "")
        .def_readwrite("samples", &FrictionCurve::samples)
        .def_readwrite("label", &FrictionCurve::label)
        .def("validate", &FrictionCurve::validate)
        .def("min_load", &FrictionCurve::min_load)
        .def("max_load", &FrictionCurve::max_load)
        .def("friction_at", &FrictionCurve::friction_at, py::arg("load"))
        .def("contains", &FrictionCurve::contains, py::arg("load"))
        .def("loads",
             [](const FrictionCurve& c) {
                 std::vector<double> out;
                 for (const auto& s : c.samples) {
                     out.push_back(s.load_force);
                 }
                 return out;
             })
        .def("frictions", [](const FrictionCurve& c) {
            std::vector<double> out;
            for (const auto& s : c.samples) {
                out.push_back(s.friction_magnitude);
            }
            return out;
        });

    py::class_<GrooveLayout>(m, "GrooveLayout")
        .def(py::init<>())
        .def_readwrite("groove_count", &GrooveLayout::groove_count)
        .def_readwrite("groove_pitch_deg", &GrooveLayout::groove_pitch_deg)
        .def_readwrite("segment_angle_deg", &GrooveLayout::segment_angle_deg)
        .def_readwrite("groove_radius_mm", &GrooveLayout::groove_radius_mm)
        .def_readwrite("pin_diameter_mm", &GrooveLayout::pin_diameter_mm)
        .def_readwrite("pin_diameter_tol_mm", &GrooveLayout::pin_diameter_tol_mm)
        .def_readwrite("substrate_thickness_mm", &GrooveLayout::substrate_thickness_mm)
        .def_readwrite("tendon_contact_angle_deg", &GrooveLayout::tendon_contact_angle_deg)
        .def("validate", &GrooveLayout::validate);

    py::class_<PinConfiguration>(m, "PinConfiguration")
        .def(py::init<std::vector<int>, std::string>(), py::arg("occupied_grooves"),
             py::arg("label") = "")
        .def_readwrite("occupied_grooves", &PinConfiguration::occupied_grooves)
        .def_readwrite("label", &PinConfiguration::label)
        .def("pin_count", &PinConfiguration::pin_count);

    py::class_<RigConfig>(m, "RigConfig")
        .def(py::init<>())
        .def_readwrite("pulley_radius_mm", &RigConfig::pulley_radius_mm)
        .def_readwrite("actuator_stroke_mm", &RigConfig::actuator_stroke_mm)
        .def_readwrite("sample_rate_hz", &RigConfig::sample_rate_hz)
        .def_readwrite("hook_mass_kg", &RigConfig::hook_mass_kg)
        .def_readwrite("gravity_mps2", &RigConfig::gravity_mps2)
        .def_readwrite("on_duration_ms", &RigConfig::on_duration_ms)
        .def_readwrite("off_duration_ms", &RigConfig::off_duration_ms)
        .def("validate", &RigConfig::validate);

    py::class_<LoadCase>(m, "LoadCase")
        .def(py::init<double, double>(), py::arg("mass_kg"), py::arg("speed_percent"))
        .def_readwrite("mass_kg", &LoadCase::mass_kg)
        .def_readwrite("speed_percent", &LoadCase::speed_percent);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init<double, double>(), py::arg("force_sigma") = 0.05,
             py::arg("settle_time_ms") = 500.0)
        .def_readwrite("force_sigma", &NoiseModel::force_sigma)
        .def_readwrite("settle_time_ms", &NoiseModel::settle_time_ms);

    py::class_<ForceTrace>(m, "ForceTrace")
        .def(py::init<>())
        .def_readwrite("timestamps", &ForceTrace::timestamps)
        .def_readwrite("forces", &ForceTrace::forces)
        .def_readwrite("positions", &ForceTrace::positions)
        .def_readwrite("phases", &ForceTrace::phases)
        .def_readwrite("load_case", &ForceTrace::load_case)
        .def_readwrite("seed", &ForceTrace::seed)
        .def("__len__", &ForceTrace::size);

    py::class_<PlateauSegment>(m, "PlateauSegment")
        .def_readonly("start_index", &PlateauSegment::start_index)
        .def_readonly("end_index", &PlateauSegment::end_index)
        .def_readonly("direction", &PlateauSegment::direction)
        .def_readonly("mean_force", &PlateauSegment::mean_force)
        .def_readonly("std_force", &PlateauSegment::std_force)
        .def("sample_count", &PlateauSegment::sample_count);

    py::class_<PhaseStats>(m, "PhaseStats")
        .def_readonly("direction", &PhaseStats::direction)
        .def_readonly("mean", &PhaseStats::mean)
        .def_readonly("std", &PhaseStats::std)
        .def_readonly("segment_count", &PhaseStats::segment_count);

    py::class_<ParameterBounds>(m, "ParameterBounds")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &ParameterBounds::lo)
        .def_readwrite("hi", &ParameterBounds::hi);

    py::class_<FitProblem>(m, "FitProblem")
        .def(py::init<>())
        .def_readwrite("device_curve", &FitProblem::device_curve)
        .def_readwrite("low_curve", &FitProblem::low_curve)
        .def_readwrite("high_curve", &FitProblem::high_curve)
        .def_readwrite("free_parameters", &FitProblem::free_parameters)
        .def_readwrite("threshold_bounds", &FitProblem::threshold_bounds)
        .def_readwrite("width_bounds", &FitProblem::width_bounds)
        .def_readwrite("weight_bounds", &FitProblem::weight_bounds)
        .def_readwrite("weight_by_sigma", &FitProblem::weight_by_sigma);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("params", &FitResult::params)
        .def_readonly("rmse", &FitResult::rmse)
        .def_readonly("r_squared", &FitResult::r_squared)
        .def_readonly("iterations", &FitResult::iterations)
        .def_readonly("converged", &FitResult::converged);

    // core model
    m.def("deg_to_rad", &deg_to_rad, py::arg("degrees"));
    m.def("rad_to_deg", &rad_to_deg, py::arg("radians"));
    m.def("capstan_holding_force", &capstan_holding_force, py::arg("load"),
          py::arg("contact"), py::arg("direction"));
    m.def("capstan_friction_magnitude", &capstan_friction_magnitude, py::arg("load"),
          py::arg("contact"));
    m.def("friction_from_forces", &friction_from_forces, py::arg("f_eccentric"),
          py::arg("f_concentric"));
    m.def("eccentric_advantage", &eccentric_advantage, py::arg("contact"));
    m.def("sigmoid_weight", &sigmoid_weight, py::arg("load"), py::arg("threshold_force"),
          py::arg("scale"));
    m.def("transition_scale", &transition_scale, py::arg("range"));
    m.def("switch_friction", &switch_friction, py::arg("load"), py::arg("friction_low"),
          py::arg("friction_high"), py::arg("params"));
    m.def("switch_friction_curve", &switch_friction_curve, py::arg("loads"),
          py::arg("low_curve"), py::arg("high_curve"), py::arg("params"));
    m.def("capstan_characteristic_curve", &capstan_characteristic_curve, py::arg("loads"),
          py::arg("mu"), py::arg("wrap_angle"), py::arg("label") = "capstan");

    // geometry
    m.def("uniform_configuration", &uniform_configuration, py::arg("pin_count"),
          py::arg("gap"), py::arg("layout") = GrooveLayout{});
    m.def("spanned_angle", &spanned_angle, py::arg("config"),
          py::arg("layout") = GrooveLayout{});
    m.def("estimate_weight", &estimate_weight, py::arg("config"),
          py::arg("layout") = GrooveLayout{}, py::arg("pulley_radius_mm") = 22.0);

    // rig + simulation
    m.def("table1_loads", &table1_loads);
    m.def("load_force", &load_force, py::arg("load_case"), py::arg("rig") = RigConfig{});
    m.def("derive_seed", &derive_seed, py::arg("master_seed"), py::arg("trial_ordinal"));
    m.def("simulate_trial", &simulate_trial, py::arg("rig"), py::arg("load_case"),
          py::arg("friction_model"), py::arg("noise"), py::arg("direction"),
          py::arg("repetitions"), py::arg("seed"));
    m.def("simulate_experiment", &simulate_experiment, py::arg("rig"), py::arg("loads"),
          py::arg("friction_model"), py::arg("noise"), py::arg("master_seed"));

    // pipeline
    m.def("segment_plateaus", &segment_plateaus, py::arg("trace"),
          py::arg("min_dwell_ms") = kDefaultMinDwellMs,
          py::arg("slope_tolerance") = kDefaultSlopeTolerance);
    m.def("phase_stats", &phase_stats, py::arg("segments"), py::arg("direction"));
    m.def("extract_friction", &extract_friction, py::arg("eccentric"), py::arg("concentric"),
          py::arg("load"));
    m.def("build_friction_curve", &build_friction_curve, py::arg("traces"), py::arg("rig"),
          py::arg("min_dwell_ms") = kDefaultMinDwellMs,
          py::arg("slope_tolerance") = kDefaultSlopeTolerance);

    // fitting
    m.def("residuals", &residuals, py::arg("params"), py::arg("problem"));
    m.def("fit_switch_model", &fit_switch_model, py::arg("problem"), py::arg("initial"),
          py::arg("max_iterations") = 2000, py::arg("tolerance") = 1e-12);
    m.def("fit_quality", &fit_quality, py::arg("result"), py::arg("problem"));

    // file formats
    m.def("trace_to_csv", &trace_to_csv, py::arg("trace"));
    m.def("trace_from_csv", &trace_from_csv, py::arg("text"), py::arg("load_case") = LoadCase{},
          py::arg("seed") = 0);
    m.def("curve_to_csv", &curve_to_csv, py::arg("curve"));
    m.def("curve_from_csv", &curve_from_csv, py::arg("text"));
    m.def("write_trace_csv", &write_trace_csv, py::arg("path"), py::arg("trace"));
    m.def("read_trace_csv", &read_trace_csv, py::arg("path"), py::arg("load_case") = LoadCase{},
          py::arg("seed") = 0);
    m.def("write_curve_csv", &write_curve_csv, py::arg("path"), py::arg("curve"));
    m.def("read_curve_csv", &read_curve_csv, py::arg("path"));
    m.def("curves_to_svg", &curves_to_svg, py::arg("curves"));
}
