#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ranktest::harness {

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

/// Minimal deterministic SVG line chart; the results CSV remains the
/// contract and this is a convenience view of it. y is clamped to [0, 1]
/// (power axis); an optional horizontal reference line marks alpha.
std::string render_line_svg(const std::string& title, const std::string& x_label,
                            const std::string& y_label, std::span<const SvgSeries> series,
                            std::optional<double> reference_y = std::nullopt);

}  // namespace ranktest::harness
