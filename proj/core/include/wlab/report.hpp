#pragma once

#include <string>
#include <vector>

namespace wlab {

// One data series of an SVG log-log plot.
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool markers = false;
};

// Self-contained SVG (polyline/axis primitives only, byte-stable output).
// Points with nonpositive coordinates are dropped (log axes).
std::string svg_loglog_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<PlotSeries>& series);

// Simple least-squares line fit y ~ slope*x + intercept.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wlab
