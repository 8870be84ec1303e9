#include "tofhair/noisemap/variance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tofhair/core/error.hpp"
#include "tofhair/core/parallel.hpp"

namespace tofhair::noisemap {

VarianceMap variance_map(const DepthFrame& depth, int window_size, double sigma,
                         bool weighted_mean, int jobs) {
    if (window_size < 3 || window_size % 2 == 0)
        throw std::invalid_argument("variance_map: window_size must be odd and >= 3");
    if (depth.width <= 0 || depth.height <= 0)
        throw std::invalid_argument("variance_map: empty frame");
    if (depth.valid_count() == 0)
        throw EmptyRegionError("variance_map: frame has no valid pixels");
    if (sigma <= 0.0) sigma = window_size / 4.0;

    const int r = window_size / 2;
    // unnormalized spatial kernel, indexed by (dy+r)*(2r+1)+(dx+r)
    std::vector<double> kernel(static_cast<std::size_t>(window_size) * window_size);
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
            kernel[static_cast<std::size_t>(dy + r) * window_size + (dx + r)] =
                std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));

    VarianceMap out(depth.width, depth.height);
    out.window_size = window_size;
    out.gaussian_sigma = sigma;

    parallel_for(static_cast<std::size_t>(depth.height), jobs, [&](std::size_t row) {
        int y = static_cast<int>(row);
        for (int x = 0; x < depth.width; ++x) {
            int x0 = std::max(0, x - r), x1 = std::min(depth.width - 1, x + r);
            int y0 = std::max(0, y - r), y1 = std::min(depth.height - 1, y + r);
            double wsum = 0.0, usum = 0.0, dsum = 0.0;
            int n_valid = 0;
            for (int wy = y0; wy <= y1; ++wy)
                for (int wx = x0; wx <= x1; ++wx) {
                    if (!depth.is_valid(wx, wy)) continue;
                    double w = kernel[static_cast<std::size_t>(wy - y + r) * window_size +
                                      (wx - x + r)];
                    wsum += w;
                    usum += w * depth.depth.at(wx, wy);
                    dsum += depth.depth.at(wx, wy);
                    ++n_valid;
                }
            if (n_valid == 0) {
                out.values.at(x, y) = 0.0;
                out.valid.at(x, y) = 0;
                continue;
            }
            double mean = weighted_mean ? usum / wsum : dsum / n_valid;
            double dev = 0.0;
            for (int wy = y0; wy <= y1; ++wy)
                for (int wx = x0; wx <= x1; ++wx) {
                    if (!depth.is_valid(wx, wy)) continue;
                    double w = kernel[static_cast<std::size_t>(wy - y + r) * window_size +
                                      (wx - x + r)] / wsum;
                    double diff = depth.depth.at(wx, wy) - mean;
                    dev += w * diff * diff;
                }
            out.values.at(x, y) = dev / n_valid;
            out.valid.at(x, y) = 1;
        }
    });
    return out;
}

VarianceMap multiscale_variance(const DepthFrame& depth, double sigma,
                                bool weighted_mean, int jobs) {
    if (depth.width < kMultiscaleWindows.back() ||
        depth.height < kMultiscaleWindows.back())
        throw std::invalid_argument("multiscale_variance: frame smaller than 11x11");

    VarianceMap out(depth.width, depth.height);
    out.window_size = 0;
    out.gaussian_sigma = sigma;
    bool first = true;
    for (int w : kMultiscaleWindows) {
        VarianceMap single = variance_map(depth, w, sigma, weighted_mean, jobs);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += single.values[i];
        if (first) {
            out.valid = single.valid;  // smallest window constrains validity
            first = false;
        }
    }
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] /= static_cast<double>(kMultiscaleWindows.size());
        if (!out.valid[i]) out.values[i] = 0.0;
    }
    return out;
}

}  // namespace tofhair::noisemap
