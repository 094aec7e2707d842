#include "latticehull/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lh {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct LogScale {
    double lo = 0.0, hi = 1.0;  // log10 range
    double px_lo = 0.0, px_hi = 1.0;
    double map(double value) const {
        const double t = (std::log10(value) - lo) / (hi - lo);
        return px_lo + t * (px_hi - px_lo);
    }
};

// decade tick positions covering [lo, hi] in log10 units
std::vector<double> decade_ticks(double lo, double hi) {
    std::vector<double> ticks;
    for (int e = static_cast<int>(std::floor(lo)); e <= static_cast<int>(std::ceil(hi)); ++e)
        ticks.push_back(std::pow(10.0, e));
    return ticks;
}

}  // namespace

std::string render_loglog_svg(const ScalingResult& result, std::optional<double> reference_slope) {
    std::vector<double> xs, ys, ylo, yhi;
    for (const ScalingRow& row : result.rows) {
        if (!(row.estimate.value > 0.0)) continue;
        xs.push_back(row.lambda);
        ys.push_back(row.estimate.value);
        const double band = 4.0 * row.estimate.std_error;
        ylo.push_back(std::max(row.estimate.value - band, row.estimate.value * 1e-3));
        yhi.push_back(row.estimate.value + band);
    }
    if (xs.empty()) throw std::invalid_argument("render_loglog_svg: no positive rows to plot");

    double xmin = xs.front(), xmax = xs.front(), ymin = ylo.front(), ymax = yhi.front();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
        ymin = std::min(ymin, ylo[i]);
        ymax = std::max(ymax, yhi[i]);
    }

    LogScale sx{std::log10(xmin) - 0.05, std::log10(xmax) + 0.05, kMarginLeft, kWidth - kMarginRight};
    LogScale sy{std::log10(ymin) - 0.1, std::log10(ymax) + 0.1, kHeight - kMarginBottom, kMarginTop};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";

    // axes
    svg << "<path d=\"M " << num(kMarginLeft) << " " << num(kMarginTop) << " L " << num(kMarginLeft)
        << " " << num(kHeight - kMarginBottom) << " L " << num(kWidth - kMarginRight) << " "
        << num(kHeight - kMarginBottom) << "\" stroke=\"black\" fill=\"none\" stroke-width=\"1\"/>\n";

    // log ticks and grid
    for (double tick : decade_ticks(sx.lo, sx.hi)) {
        const double px = sx.map(tick);
        if (px < kMarginLeft - 1.0 || px > kWidth - kMarginRight + 1.0) continue;
        svg << "<path d=\"M " << num(px) << " " << num(kHeight - kMarginBottom) << " L " << num(px)
            << " " << num(kMarginTop) << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        svg << "<text x=\"" << num(px) << "\" y=\"" << num(kHeight - kMarginBottom + 18.0)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << sci(tick) << "</text>\n";
    }
    for (double tick : decade_ticks(sy.lo, sy.hi)) {
        const double py = sy.map(tick);
        if (py < kMarginTop - 1.0 || py > kHeight - kMarginBottom + 1.0) continue;
        svg << "<path d=\"M " << num(kMarginLeft) << " " << num(py) << " L "
            << num(kWidth - kMarginRight) << " " << num(py)
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        svg << "<text x=\"" << num(kMarginLeft - 8.0) << "\" y=\"" << num(py + 4.0)
            << "\" font-size=\"11\" text-anchor=\"end\">" << sci(tick) << "</text>\n";
    }

    // fitted line over the data range
    if (result.fit.valid) {
        const double y0 = std::exp(result.fit.intercept + result.fit.slope * std::log(xmin));
        const double y1 = std::exp(result.fit.intercept + result.fit.slope * std::log(xmax));
        svg << "<path d=\"M " << num(sx.map(xmin)) << " " << num(sy.map(y0)) << " L "
            << num(sx.map(xmax)) << " " << num(sy.map(y1))
            << "\" stroke=\"#d62728\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    }

    // optional reference slope anchored at the first point
    if (reference_slope) {
        const double y0 = ys.front();
        const double y1 = y0 * std::pow(xmax / xs.front(), *reference_slope);
        svg << "<path d=\"M " << num(sx.map(xs.front())) << " " << num(sy.map(y0)) << " L "
            << num(sx.map(xmax)) << " " << num(sy.map(y1))
            << "\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"5,4\" fill=\"none\"/>\n";
        svg << "<text x=\"" << num(kWidth - kMarginRight - 4.0) << "\" y=\"" << num(kMarginTop + 14.0)
            << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#2ca02c\">reference slope "
            << sci(*reference_slope) << "</text>\n";
    }

    // error bars and points
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double px = sx.map(xs[i]);
        svg << "<path d=\"M " << num(px) << " " << num(sy.map(ylo[i])) << " L " << num(px) << " "
            << num(sy.map(yhi[i])) << "\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
        svg << "<circle cx=\"" << num(px) << "\" cy=\"" << num(sy.map(ys[i]))
            << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    }

    // labels
    svg << "<text x=\"" << num((kMarginLeft + kWidth - kMarginRight) / 2.0) << "\" y=\""
        << num(kHeight - 12.0) << "\" font-size=\"13\" text-anchor=\"middle\">lambda</text>\n";
    svg << "<text x=\"16\" y=\"" << num((kMarginTop + kHeight - kMarginBottom) / 2.0)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << num((kMarginTop + kHeight - kMarginBottom) / 2.0) << ")\">" << result.body_spec << " "
        << to_string(result.functional) << " difference</text>\n";
    if (result.fit.valid) {
        svg << "<text x=\"" << num(kMarginLeft + 6.0) << "\" y=\"" << num(kMarginTop - 10.0)
            << "\" font-size=\"12\">fitted exponent " << sci(result.fit.slope) << "  [" << sci(result.fit.ci_lo)
            << ", " << sci(result.fit.ci_hi) << "]  r2=" << sci(result.fit.r_squared) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

void write_loglog_svg(const std::string& path, const ScalingResult& result,
                      std::optional<double> reference_slope) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open SVG output file: " + path);
    out << render_loglog_svg(result, reference_slope);
}

}  // namespace lh
