#include "tofhair/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "tofhair/core/error.hpp"
#include "tofhair/io/csv.hpp"

namespace tofhair::io {

namespace {
constexpr double kW = 640.0, kH = 400.0;
constexpr double kMarginL = 70.0, kMargin = 30.0, kMarginB = 45.0;
}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = 0.0, ymax = -std::numeric_limits<double>::infinity();
    for (const auto& s : series) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymax = std::max(ymax, v); }
    }
    if (!(xmax > xmin)) { xmin = 0.0; xmax = 1.0; }
    if (!(ymax > ymin)) ymax = 1.0;

    const double pw = kW - kMarginL - kMargin;
    const double ph = kH - kMargin - kMarginB;
    auto sx = [&](double v) { return kMarginL + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) { return kMargin + ph - (v - ymin) / (ymax - ymin) * ph; };

    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
        << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kW / 2 << "\" y=\"18\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMargin + ph << "\" x2=\""
        << kMarginL + pw << "\" y2=\"" << kMargin + ph
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMargin << "\" x2=\""
        << kMarginL << "\" y2=\"" << kMargin + ph << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double xv = xmin + (xmax - xmin) * k / 4.0;
        double yv = ymin + (ymax - ymin) * k / 4.0;
        out << "<text x=\"" << sx(xv) << "\" y=\"" << kMargin + ph + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"10\">" << fmt_double(xv) << "</text>\n";
        out << "<text x=\"" << kMarginL - 6 << "\" y=\"" << sy(yv) + 3
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"10\">" << fmt_double(yv) << "</text>\n";
    }
    double legend_y = kMargin + 8.0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            out << sx(s.x[i]) << "," << sy(s.y[i]) << " ";
        out << "\"/>\n";
        out << "<line x1=\"" << kMarginL + pw - 130 << "\" y1=\"" << legend_y
            << "\" x2=\"" << kMarginL + pw - 110 << "\" y2=\"" << legend_y
            << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kMarginL + pw - 105 << "\" y=\"" << legend_y + 3
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.name
            << "</text>\n";
        legend_y += 14.0;
    }
    out << "</svg>\n";
    if (!out) throw DataError("write failed: " + path);
}

}  // namespace tofhair::io
