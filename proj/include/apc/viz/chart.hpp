#pragma once
// Chart model (plain doubles) and SVG rendering.

#include <optional>
#include <string>
#include <vector>

namespace apc::viz {

enum class ChartKind { Line, Scatter, Histogram };

std::string_view chart_kind_name(ChartKind kind) noexcept;

struct ChartSpec {
    std::string name;
    ChartKind kind = ChartKind::Line;
    // Line/scatter: points. Histogram: x holds left bin edges, y the counts.
    std::vector<double> x;
    std::vector<double> y;
    double bin_width = 0;
    std::string title;
    std::string xtitle;
    std::string ytitle;
    std::optional<double> xmin, xmax, ymin, ymax;
};

struct Axis {
    double lo = 0;
    double hi = 1;
    double step = 1;
    std::vector<double> ticks;
};

// Pads [min, max] by 5% on each side (a degenerate range is widened first).
std::pair<double, double> padded_range(double min, double max);

// Picks the smallest step from the 1/2/5 x 10^k ladder giving 5..8 ticks
// inside [lo, hi]; when no step fits, the limits grow outward to the
// nearest multiples of the step.
Axis nice_axis(double lo, double hi);

std::string render_svg(const ChartSpec& chart, int width = 640, int height = 480);

std::string xml_escape(std::string_view text);

}  // namespace apc::viz
