#include "ranktest/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ranktest/experiment.hpp"

namespace ranktest::harness {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string round3(double v) {
    const double r = std::round(v * 1000.0) / 1000.0;
    return format_double(r == 0.0 ? 0.0 : r);  // normalize -0
}

}  // namespace

std::string render_line_svg(const std::string& title, const std::string& x_label,
                            const std::string& y_label, std::span<const SvgSeries> series,
                            std::optional<double> reference_y) {
    double x_min = 0.0, x_max = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            (void)y;
            if (first) {
                x_min = x_max = x;
                first = false;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
            }
        }
    }
    if (first) throw std::invalid_argument("svg plot needs at least one point");
    if (x_max == x_min) x_max = x_min + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) {
        return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * plot_h;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

    // axes and ticks
    out << "<g stroke=\"#333\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\"/>\n</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int tick = 0; tick <= 5; ++tick) {
        const double fx = x_min + (x_max - x_min) * tick / 5.0;
        const double fy = tick / 5.0;
        out << "<text x=\"" << round3(sx(fx)) << "\" y=\"" << kTop + plot_h + 18
            << "\" text-anchor=\"middle\">" << round3(fx) << "</text>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << round3(sy(fy) + 4)
            << "\" text-anchor=\"end\">" << round3(fy) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">"
        << y_label << "</text>\n</g>\n";

    if (reference_y) {
        out << "<line x1=\"" << kLeft << "\" y1=\"" << round3(sy(*reference_y)) << "\" x2=\""
            << kLeft + plot_w << "\" y2=\"" << round3(sy(*reference_y))
            << "\" stroke=\"#999\" stroke-dasharray=\"4,3\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : series[s].points)
            out << round3(sx(x)) << ',' << round3(sy(y)) << ' ';
        out << "\"/>\n";
        for (const auto& [x, y] : series[s].points)
            out << "<circle cx=\"" << round3(sx(x)) << "\" cy=\"" << round3(sy(y))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << kLeft + plot_w - 6 << "\" y=\"" << kTop + 16 + 16 * s
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << color << "\">" << series[s].label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ranktest::harness
