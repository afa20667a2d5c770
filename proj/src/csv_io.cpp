#include "fswitch/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

double parse_double(std::string_view token, const char* column) {
    double value = 0.0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw DataError(std::string("bad numeric value in column ") + column + ": '" +
                        std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

// Lines without trailing \r so CRLF input parses too.
std::vector<std::string_view> split_lines(const std::string& text) {
    std::vector<std::string_view> lines;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t nl = rest.find('\n');
        std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        if (nl == std::string_view::npos) {
            break;
        }
        rest = rest.substr(nl + 1);
    }
    return lines;
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }
    return std::string(buf, ptr);
}

std::string phase_to_string(Phase phase) {
    switch (phase) {
    case Phase::EccentricDwell:
        return "ecc";
    case Phase::ConcentricDwell:
        return "conc";
    case Phase::Moving:
        return "move";
    case Phase::Settling:
        return "settle";
    case Phase::Unknown:
        break;
    }
    return "unknown";
}

Phase phase_from_string(const std::string& token) {
    if (token == "ecc") {
        return Phase::EccentricDwell;
    }
    if (token == "conc") {
        return Phase::ConcentricDwell;
    }
    if (token == "move") {
        return Phase::Moving;
    }
    if (token == "settle") {
        return Phase::Settling;
    }
    if (token == "unknown") {
        return Phase::Unknown;
    }
    throw DataError("unknown phase token '" + token + "'");
}

std::string trace_to_csv(const ForceTrace& trace) {
    trace.validate();
    std::string out = "time_s,force_N,position_mm,phase\n";
    out.reserve(out.size() + trace.size() * 40);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out += format_double(trace.timestamps[i]);
        out += ',';
        out += format_double(trace.forces[i]);
        out += ',';
        out += format_double(trace.positions[i]);
        out += ',';
        out += phase_to_string(trace.phases[i]);
        out += '\n';
    }
    return out;
}

ForceTrace trace_from_csv(const std::string& text, const LoadCase& load_case,
                          std::uint64_t seed) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != "time_s,force_N,position_mm,phase") {
        throw DataError("trace CSV must start with header time_s,force_N,position_mm,phase");
    }
    ForceTrace trace;
    trace.load_case = load_case;
    trace.seed = seed;
    trace.timestamps.reserve(lines.size() - 1);
    trace.forces.reserve(lines.size() - 1);
    trace.positions.reserve(lines.size() - 1);
    trace.phases.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_line(lines[i]);
        if (fields.size() != 4) {
            throw DataError("trace CSV row needs 4 fields, got " +
                            std::to_string(fields.size()));
        }
        trace.timestamps.push_back(parse_double(fields[0], "time_s"));
        trace.forces.push_back(parse_double(fields[1], "force_N"));
        trace.positions.push_back(parse_double(fields[2], "position_mm"));
        trace.phases.push_back(phase_from_string(std::string(fields[3])));
    }
    trace.validate();
    return trace;
}

std::string curve_to_csv(const FrictionCurve& curve) {
    curve.validate();
    std::string out = "load_N,friction_N,sigma_N,label\n";
    for (const auto& s : curve.samples) {
        out += format_double(s.load_force);
        out += ',';
        out += format_double(s.friction_magnitude);
        out += ',';
        out += format_double(s.sigma);
        out += ',';
        out += curve.label;
        out += '\n';
    }
    return out;
}

FrictionCurve curve_from_csv(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != "load_N,friction_N,sigma_N,label") {
        throw DataError("curve CSV must start with header load_N,friction_N,sigma_N,label");
    }
    FrictionCurve curve;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_line(lines[i]);
        if (fields.size() != 4) {
            throw DataError("curve CSV row needs 4 fields, got " +
                            std::to_string(fields.size()));
        }
        FrictionSample sample;
        sample.load_force = parse_double(fields[0], "load_N");
        sample.friction_magnitude = parse_double(fields[1], "friction_N");
        sample.sigma = parse_double(fields[2], "sigma_N");
        curve.samples.push_back(sample);
        if (i == 1) {
            curve.label = std::string(fields[3]);
        }
    }
    curve.validate();
    return curve;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw IoError("read failed for " + path.string());
    }
    return buffer.str();
}

void write_trace_csv(const std::filesystem::path& path, const ForceTrace& trace) {
    atomic_write_file(path, trace_to_csv(trace));
}

ForceTrace read_trace_csv(const std::filesystem::path& path, const LoadCase& load_case,
                          std::uint64_t seed) {
    return trace_from_csv(read_file(path), load_case, seed);
}

void write_curve_csv(const std::filesystem::path& path, const FrictionCurve& curve) {
    atomic_write_file(path, curve_to_csv(curve));
}

FrictionCurve read_curve_csv(const std::filesystem::path& path) {
    return curve_from_csv(read_file(path));
}

} // namespace fswitch
