#pragma once

#include <string>
#include <vector>

namespace tofhair::io {

/// One polyline in a curve plot.
struct SvgSeries {
    std::string name;
    std::string color;        // e.g. "#d62728"
    std::vector<double> x;
    std::vector<double> y;
};

/// Writes a minimal standalone SVG line plot (axes, series polylines, legend).
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series);

}  // namespace tofhair::io
