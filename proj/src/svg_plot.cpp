#include "fswitch/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fswitch/errors.hpp"

namespace fswitch {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 660.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 460.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string curves_to_svg(const std::vector<FrictionCurve>& curves) {
    if (curves.empty()) {
        throw DataError("nothing to plot");
    }
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;
    bool first = true;
    for (const auto& curve : curves) {
        curve.validate();
        if (curve.samples.empty()) {
            throw DataError("cannot plot empty curve '" + curve.label + "'");
        }
        for (const auto& s : curve.samples) {
            if (first) {
                x_lo = x_hi = s.load_force;
                y_lo = s.friction_magnitude - s.sigma;
                y_hi = s.friction_magnitude + s.sigma;
                first = false;
            }
            x_lo = std::min(x_lo, s.load_force);
            x_hi = std::max(x_hi, s.load_force);
            y_lo = std::min(y_lo, s.friction_magnitude - s.sigma);
            y_hi = std::max(y_hi, s.friction_magnitude + s.sigma);
        }
    }
    y_lo = std::min(y_lo, 0.0);
    if (x_hi - x_lo < 1e-12) {
        x_hi = x_lo + 1.0;
        x_lo -= 1.0;
    }
    if (y_hi - y_lo < 1e-12) {
        y_hi = y_lo + 1.0;
    }
    const double x_pad = 0.04 * (x_hi - x_lo);
    const double y_pad = 0.06 * (y_hi - y_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    y_hi += y_pad;

    const auto sx = [&](double load) {
        return kLeft + (load - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
    };
    const auto sy = [&](double friction) {
        return kBottom - (friction - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) +
           "\" height=\"" + fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " +
           fixed(kHeight) + "\">\n";
    svg += "<rect width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
           "\" fill=\"white\"/>\n";

    // axes with 6 ticks per side
    svg += "<g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n";
    svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kBottom) + "\" x2=\"" +
           fixed(kRight) + "\" y2=\"" + fixed(kBottom) + "\"/>\n";
    svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" +
           fixed(kLeft) + "\" y2=\"" + fixed(kBottom) + "\"/>\n";
    svg += "</g>\n";

    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / 5.0;
        const double fy = y_lo + (y_hi - y_lo) * i / 5.0;
        svg += "<line x1=\"" + fixed(sx(fx)) + "\" y1=\"" + fixed(kBottom) + "\" x2=\"" +
               fixed(sx(fx)) + "\" y2=\"" + fixed(kBottom + 5) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fixed(sx(fx)) + "\" y=\"" + fixed(kBottom + 20) +
               "\" text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
        svg += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(sy(fy)) + "\" x2=\"" +
               fixed(kLeft) + "\" y2=\"" + fixed(sy(fy)) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fixed(kLeft - 9) + "\" y=\"" + fixed(sy(fy) + 4) +
               "\" text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
    }
    svg += "<text x=\"" + fixed((kLeft + kRight) / 2) + "\" y=\"" + fixed(kBottom + 42) +
           "\" text-anchor=\"middle\" font-size=\"14\">Load (N)</text>\n";
    svg += "<text x=\"18\" y=\"" + fixed((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 " +
           fixed((kTop + kBottom) / 2) + ")\">Friction (N)</text>\n";
    svg += "</g>\n";

    // sigma bands first so the lines draw on top
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto& samples = curves[c].samples;
        const char* color = kPalette[c % std::size(kPalette)];
        std::string points;
        for (const auto& s : samples) {
            points += fixed(sx(s.load_force)) + "," +
                      fixed(sy(s.friction_magnitude + s.sigma)) + " ";
        }
        for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
            points += fixed(sx(it->load_force)) + "," +
                      fixed(sy(it->friction_magnitude - it->sigma)) + " ";
        }
        svg += "<polygon points=\"" + points + "\" fill=\"" + color +
               "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    }

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto& samples = curves[c].samples;
        const char* color = kPalette[c % std::size(kPalette)];
        std::string points;
        for (const auto& s : samples) {
            points += fixed(sx(s.load_force)) + "," + fixed(sy(s.friction_magnitude)) + " ";
        }
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.8\"/>\n";
        for (const auto& s : samples) {
            svg += "<circle cx=\"" + fixed(sx(s.load_force)) + "\" cy=\"" +
                   fixed(sy(s.friction_magnitude)) + "\" r=\"2.6\" fill=\"" + color +
                   "\"/>\n";
        }
    }

    // legend, input order
    svg += "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double ly = kTop + 8.0 + 20.0 * static_cast<double>(c);
        const char* color = kPalette[c % std::size(kPalette)];
        svg += "<line x1=\"" + fixed(kRight + 18) + "\" y1=\"" + fixed(ly) + "\" x2=\"" +
               fixed(kRight + 44) + "\" y2=\"" + fixed(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2.5\"/>\n";
        svg += "<text x=\"" + fixed(kRight + 50) + "\" y=\"" + fixed(ly + 4) + "\">" +
               escape(curves[c].label) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace fswitch
