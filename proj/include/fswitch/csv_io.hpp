#pragma once

#include <filesystem>
#include <string>

#include "fswitch/curve.hpp"
#include "fswitch/rig.hpp"

namespace fswitch {

// Trace CSV: header `time_s,force_N,position_mm,phase`,
// phase in {ecc,conc,move,settle,unknown}.
std::string trace_to_csv(const ForceTrace& trace);
ForceTrace trace_from_csv(const std::string& text, const LoadCase& load_case = {},
                          std::uint64_t seed = 0);

// Curve CSV: header `load_N,friction_N,sigma_N,label`.
std::string curve_to_csv(const FrictionCurve& curve);
FrictionCurve curve_from_csv(const std::string& text);

void write_trace_csv(const std::filesystem::path& path, const ForceTrace& trace);
ForceTrace read_trace_csv(const std::filesystem::path& path, const LoadCase& load_case = {},
                          std::uint64_t seed = 0);
void write_curve_csv(const std::filesystem::path& path, const FrictionCurve& curve);
FrictionCurve read_curve_csv(const std::filesystem::path& path);

// Write-to-temp + atomic rename; partial files never land on the target path.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

std::string phase_to_string(Phase phase);
Phase phase_from_string(const std::string& token);

// Shortest decimal form that round-trips a double ("%.17g" fallback).
std::string format_double(double value);

} // namespace fswitch
