#pragma once

#include <array>

#include "tofhair/core/frame.hpp"
#include "tofhair/core/image.hpp"

namespace tofhair::noisemap {

/// Per-pixel Gaussian-windowed variance of depth. Values are squared meters.
/// A pixel is valid when its window saw at least one valid depth sample.
struct VarianceMap {
    int width = 0;
    int height = 0;
    ImageF values;
    ImageU8 valid;
    int window_size = 0;     // odd, >= 3; 0 for multi-scale averages
    double gaussian_sigma = 0.0;

    VarianceMap() = default;
    VarianceMap(int w, int h)
        : width(w), height(h), values(w, h, 0.0), valid(w, h, 0) {}

    bool is_valid(int x, int y) const { return valid.at(x, y) != 0; }
};

/// Window sizes averaged by multiscale_variance.
inline constexpr std::array<int, 4> kMultiscaleWindows = {5, 7, 9, 11};

/// Sliding-window weighted variance: at pixel j,
///
///   v_j = sum_i w_i * (d_i - dbar)^2 / N(A)
///
/// over the window A centered at j (clipped at borders), where w_i are
/// Gaussian spatial weights normalized over the valid pixels of A, dbar the
/// weighted mean, and N(A) the valid-pixel count. `sigma <= 0` selects the
/// default window_size / 4. Set `weighted_mean = false` to use the plain
/// (unweighted) window mean for dbar instead.
VarianceMap variance_map(const DepthFrame& depth, int window_size, double sigma,
                         bool weighted_mean = true, int jobs = 1);

/// Pixel-wise mean of variance_map at window sizes 5, 7, 9 and 11.
/// Output validity follows the smallest window.
VarianceMap multiscale_variance(const DepthFrame& depth, double sigma,
                                bool weighted_mean = true, int jobs = 1);

}  // namespace tofhair::noisemap
