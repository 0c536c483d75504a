#include "apc/viz/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "apc/errors.hpp"

namespace apc::viz {

std::string_view chart_kind_name(ChartKind kind) noexcept {
    switch (kind) {
    case ChartKind::Line: return "line";
    case ChartKind::Scatter: return "scatter";
    case ChartKind::Histogram: return "histogram";
    }
    return "line";
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::pair<double, double> padded_range(double min, double max) {
    if (max < min) std::swap(min, max);
    if (max == min) {
        double half = std::max(std::fabs(min), 1.0) * 0.5;
        min -= half;
        max += half;
    }
    double pad = (max - min) * 0.05;
    return {min - pad, max + pad};
}

namespace {

constexpr double kEps = 1e-9;

std::int64_t first_index(double lo, double step) { return std::int64_t(std::ceil(lo / step - kEps)); }
std::int64_t last_index(double hi, double step) { return std::int64_t(std::floor(hi / step + kEps)); }

Axis build(double lo, double hi, double step) {
    Axis a{lo, hi, step, {}};
    for (std::int64_t i = first_index(lo, step); i <= last_index(hi, step); ++i) {
        double t = double(i) * step;
        a.ticks.push_back(std::fabs(t) < step * kEps ? 0.0 : t);
    }
    return a;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v, double step) {
    char buf[40];
    double mag = std::max(std::fabs(v), step);
    if (mag >= 1e6 || step < 1e-4) {
        std::snprintf(buf, sizeof buf, "%.3g", v);
    } else {
        int decimals = std::max(0, -int(std::floor(std::log10(step) + kEps)));
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    }
    return buf;
}

}  // namespace

Axis nice_axis(double lo, double hi) {
    if (!(hi > lo)) std::tie(lo, hi) = padded_range(lo, hi);
    const double span = hi - lo;
    int k = int(std::floor(std::log10(span / 8.0))) - 1;
    static const double mantissas[] = {1.0, 2.0, 5.0};
    double fallback = 0;
    for (int decade = k; decade < k + 4 && fallback == 0; ++decade) {
        for (double m : mantissas) {
            double step = m * std::pow(10.0, decade);
            std::int64_t count = last_index(hi, step) - first_index(lo, step) + 1;
            if (count >= 5 && count <= 8) return build(lo, hi, step);
            if (count < 5) {
                fallback = step;
                break;
            }
        }
    }
    // Expand to whole steps, then add steps alternately until 5 ticks.
    double step = fallback > 0 ? fallback : std::pow(10.0, k + 3);
    double a = std::floor(lo / step + kEps) * step;
    double b = std::ceil(hi / step - kEps) * step;
    bool low_side = true;
    while (std::llround((b - a) / step) + 1 < 5) {
        if (low_side) {
            a -= step;
        } else {
            b += step;
        }
        low_side = !low_side;
    }
    return build(a, b, step);
}

std::string render_svg(const ChartSpec& c, int width, int height) {
    const double left = 70, right = 20, top = c.title.empty() ? 20 : 40, bottom = c.xtitle.empty() ? 40 : 55;
    const double pw = width - left - right, ph = height - top - bottom;

    double xmin, xmax, ymin, ymax;
    if (c.kind == ChartKind::Histogram) {
        xmin = c.x.empty() ? 0 : c.x.front();
        xmax = c.x.empty() ? 1 : c.x.back() + c.bin_width;
        ymin = 0;
        ymax = c.y.empty() ? 1 : *std::max_element(c.y.begin(), c.y.end());
        std::tie(xmin, xmax) = padded_range(xmin, xmax);
        ymax = ymax > 0 ? ymax * 1.05 : 1;
    } else if (c.x.empty() || c.y.empty()) {
        xmin = ymin = 0;
        xmax = ymax = 1;
    } else {
        auto [x0, x1] = std::minmax_element(c.x.begin(), c.x.end());
        auto [y0, y1] = std::minmax_element(c.y.begin(), c.y.end());
        std::tie(xmin, xmax) = padded_range(*x0, *x1);
        std::tie(ymin, ymax) = padded_range(*y0, *y1);
    }
    if (c.xmin) xmin = *c.xmin;
    if (c.xmax) xmax = *c.xmax;
    if (c.ymin) ymin = *c.ymin;
    if (c.ymax) ymax = *c.ymax;
    Axis ax = nice_axis(xmin, xmax);
    Axis ay = nice_axis(ymin, ymax);

    auto sx = [&](double x) { return std::clamp(left + (x - ax.lo) / (ax.hi - ax.lo) * pw, left, left + pw); };
    auto sy = [&](double y) { return std::clamp(top + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph, top, top + ph); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";

    auto line = [&](double x1, double y1, double x2, double y2, const char* stroke) {
        s += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" + fmt(y2) +
             "\" stroke=\"" + stroke + "\"/>\n";
    };
    auto text = [&](double x, double y, const char* anchor, const std::string& body, const std::string& extra = {}) {
        s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" text-anchor=\"" + anchor + "\"" + extra + ">" +
             xml_escape(body) + "</text>\n";
    };

    s += "<g class=\"frame\">\n";
    line(left, top, left + pw, top, "#444");
    line(left, top + ph, left + pw, top + ph, "#444");
    line(left, top, left, top + ph, "#444");
    line(left + pw, top, left + pw, top + ph, "#444");
    s += "</g>\n<g class=\"xaxis\">\n";
    for (double t : ax.ticks) {
        double px = sx(t);
        line(px, top + ph, px, top + ph + 5, "#444");
        text(px, top + ph + 18, "middle", tick_label(t, ax.step));
    }
    s += "</g>\n<g class=\"yaxis\">\n";
    for (double t : ay.ticks) {
        double py = sy(t);
        line(left - 5, py, left, py, "#444");
        text(left - 8, py + 4, "end", tick_label(t, ay.step));
    }
    s += "</g>\n";

    switch (c.kind) {
    case ChartKind::Line: {
        s += "<polyline class=\"series\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (i) s += ' ';
            s += fmt(sx(c.x[i])) + "," + fmt(sy(c.y[i]));
        }
        s += "\"/>\n";
        break;
    }
    case ChartKind::Scatter:
        s += "<g class=\"series\" fill=\"#1f77b4\">\n";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            s += "<circle cx=\"" + fmt(sx(c.x[i])) + "\" cy=\"" + fmt(sy(c.y[i])) + "\" r=\"3\"/>\n";
        }
        s += "</g>\n";
        break;
    case ChartKind::Histogram:
        s += "<g class=\"series\" fill=\"#1f77b4\" stroke=\"#fff\">\n";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            double x0 = sx(c.x[i]), x1 = sx(c.x[i] + c.bin_width), y0 = sy(c.y[i]), y1 = sy(0);
            s += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(x1 - x0) + "\" height=\"" +
                 fmt(y1 - y0) + "\"/>\n";
        }
        s += "</g>\n";
        break;
    }

    if (!c.title.empty()) text(left + pw / 2, 24, "middle", c.title, " class=\"title\" font-size=\"15\"");
    if (!c.xtitle.empty()) text(left + pw / 2, height - 12, "middle", c.xtitle, " class=\"xtitle\"");
    if (!c.ytitle.empty()) {
        double cx = 16, cy = top + ph / 2;
        text(cx, cy, "middle", c.ytitle,
             " class=\"ytitle\" transform=\"rotate(-90 " + fmt(cx) + " " + fmt(cy) + ")\"");
    }
    s += "</svg>\n";
    return s;
}

}  // namespace apc::viz
