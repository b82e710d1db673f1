#include "wlab/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wlab/numfmt.hpp"

namespace wlab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need two samples of equal length");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

namespace {

// Fixed two-decimal pixel coordinates keep the file byte-stable.
std::string px(double v) {
    const double r = std::round(v * 100.0) / 100.0;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << r;
    return os.str();
}

}  // namespace

std::string svg_loglog_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<PlotSeries>& series) {
    const double width = 640.0, height = 480.0;
    const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;

    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
    bool any = false;
    for (const auto& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) continue;
            const double lx = std::log10(s.x[i]);
            const double ly = std::log10(s.y[i]);
            if (!any) {
                lo_x = hi_x = lx;
                lo_y = hi_y = ly;
                any = true;
            } else {
                lo_x = std::min(lo_x, lx);
                hi_x = std::max(hi_x, lx);
                lo_y = std::min(lo_y, ly);
                hi_y = std::max(hi_y, ly);
            }
        }
    }
    if (!any) {
        lo_x = lo_y = 0.0;
        hi_x = hi_y = 1.0;
    }
    if (hi_x - lo_x < 1e-12) hi_x = lo_x + 1.0;
    if (hi_y - lo_y < 1e-12) hi_y = lo_y + 1.0;

    auto X = [&](double v) { return ml + (std::log10(v) - lo_x) / (hi_x - lo_x) * (width - ml - mr); };
    auto Y = [&](double v) {
        return height - mb - (std::log10(v) - lo_y) / (hi_y - lo_y) * (height - mt - mb);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(width) << "\" height=\""
        << int(height) << "\" viewBox=\"0 0 " << int(width) << ' ' << int(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << px(width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n";
    // Axes.
    svg << "<line x1=\"" << px(ml) << "\" y1=\"" << px(height - mb) << "\" x2=\"" << px(width - mr)
        << "\" y2=\"" << px(height - mb) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << px(ml) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(ml) << "\" y2=\""
        << px(height - mb) << "\" stroke=\"black\"/>\n";
    // Decade ticks.
    for (int d = static_cast<int>(std::ceil(lo_x)); d <= static_cast<int>(std::floor(hi_x)); ++d) {
        const double xx = ml + (d - lo_x) / (hi_x - lo_x) * (width - ml - mr);
        svg << "<line x1=\"" << px(xx) << "\" y1=\"" << px(height - mb) << "\" x2=\"" << px(xx)
            << "\" y2=\"" << px(height - mb + 6) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(xx) << "\" y=\"" << px(height - mb + 20)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(lo_y)); d <= static_cast<int>(std::floor(hi_y)); ++d) {
        const double yy = height - mb - (d - lo_y) / (hi_y - lo_y) * (height - mt - mb);
        svg << "<line x1=\"" << px(ml - 6) << "\" y1=\"" << px(yy) << "\" x2=\"" << px(ml)
            << "\" y2=\"" << px(yy) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(ml - 10) << "\" y=\"" << px(yy + 4)
            << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    svg << "<text x=\"" << px((ml + width - mr) / 2) << "\" y=\"" << px(height - 10)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" << x_label
        << "</text>\n";
    svg << "<text x=\"16\" y=\"" << px((mt + height - mb) / 2)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << px((mt + height - mb) / 2) << ")\">" << y_label
        << "</text>\n";

    double legend_y = mt + 8.0;
    for (const auto& s : series) {
        std::ostringstream pts;
        bool first = true;
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) continue;
            if (!first) pts << ' ';
            pts << px(X(s.x[i])) << ',' << px(Y(s.y[i]));
            first = false;
        }
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\""
            << pts.str() << "\"/>\n";
        if (s.markers) {
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) continue;
                svg << "<circle cx=\"" << px(X(s.x[i])) << "\" cy=\"" << px(Y(s.y[i]))
                    << "\" r=\"2\" fill=\"" << s.color << "\"/>\n";
            }
        }
        svg << "<text x=\"" << px(width - mr - 8) << "\" y=\"" << px(legend_y)
            << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" fill=\""
            << s.color << "\">" << s.label << "</text>\n";
        legend_y += 14.0;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wlab
