#include "tofhair/noisemap/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tofhair/core/error.hpp"

namespace tofhair::noisemap {

std::uint64_t HistogramCurve::total() const {
    std::uint64_t n = 0;
    for (auto c : counts) n += c;
    return n;
}

std::vector<double> HistogramCurve::normalized() const {
    std::uint64_t n = total();
    if (n == 0) throw EmptyRegionError("HistogramCurve: empty histogram");
    std::vector<double> p(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        p[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    return p;
}

HistogramCurve region_histogram(const VarianceMap& vmap, const RegionMask& mask,
                                const std::vector<RegionLabel>& region_labels,
                                int bins, std::optional<double> range_max) {
    if (bins < 2) throw std::invalid_argument("region_histogram: bins must be >= 2");
    if (vmap.width != mask.width || vmap.height != mask.height)
        throw std::invalid_argument("region_histogram: dimension mismatch");

    bool in_region[kRegionLabelCount] = {};
    std::string name;
    for (RegionLabel l : region_labels) {
        in_region[static_cast<int>(l)] = true;
        if (!name.empty()) name += "+";
        name += region_label_name(l);
    }

    double hi = 0.0;
    std::uint64_t region_pixels = 0;
    for (int y = 0; y < vmap.height; ++y)
        for (int x = 0; x < vmap.width; ++x) {
            if (!in_region[static_cast<int>(mask.at(x, y))] || !vmap.is_valid(x, y))
                continue;
            ++region_pixels;
            hi = std::max(hi, vmap.values.at(x, y));
        }
    if (region_pixels == 0)
        throw EmptyRegionError("region_histogram: region '" + name +
                               "' has no valid pixels");
    if (range_max) hi = *range_max;
    if (hi <= 0.0) hi = 1.0;  // constant-zero maps still get a usable axis

    HistogramCurve curve;
    curve.region = name;
    curve.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b)
        curve.bin_edges[static_cast<std::size_t>(b)] = hi * b / bins;
    curve.counts.assign(static_cast<std::size_t>(bins), 0);

    for (int y = 0; y < vmap.height; ++y)
        for (int x = 0; x < vmap.width; ++x) {
            if (!in_region[static_cast<int>(mask.at(x, y))] || !vmap.is_valid(x, y))
                continue;
            double v = vmap.values.at(x, y);
            int b = static_cast<int>(std::floor(v / hi * bins));
            b = std::clamp(b, 0, bins - 1);  // top edge folds into the last bin
            ++curve.counts[static_cast<std::size_t>(b)];
        }
    return curve;
}

double separability(const HistogramCurve& a, const HistogramCurve& b) {
    if (a.bin_edges != b.bin_edges)
        throw std::invalid_argument("separability: histograms must share bin edges");
    std::vector<double> p = a.normalized();
    std::vector<double> q = b.normalized();
    double bc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
    if (bc <= 0.0) return std::numeric_limits<double>::infinity();
    double d = -std::log(bc);
    return d < 0.0 ? 0.0 : d;  // guard rounding when bc marginally exceeds 1
}

}  // namespace tofhair::noisemap
