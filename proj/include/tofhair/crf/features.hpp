#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tofhair/core/image.hpp"

namespace tofhair::crf {

/// Dense per-pixel feature storage for the pairwise kernels: position,
/// RGB intensity and a variable-length extra-feature vector C (flat,
/// extra_dim values per pixel). All pixels share one C dimensionality.
struct FeatureField {
    int width = 0;
    int height = 0;
    int extra_dim = 0;
    std::vector<double> position;   // 2 per pixel (x, y)
    std::vector<double> intensity;  // 3 per pixel (r, g, b)
    std::vector<double> extra;      // extra_dim per pixel

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    const double* pos(std::size_t i) const { return position.data() + 2 * i; }
    const double* rgb(std::size_t i) const { return intensity.data() + 3 * i; }
    const double* c(std::size_t i) const {
        return extra.data() + static_cast<std::size_t>(extra_dim) * i;
    }

    void check() const;
};

/// Builds a feature field from an RGB image and optional extra channels.
/// Extra channels are z-score normalized per image (a constant channel maps
/// to all zeros) so the extra-feature bandwidth means the same thing across
/// depth, disparity, variance and angle features.
FeatureField make_feature_field(const RgbImage& rgb,
                                const std::vector<ImageF>& extra_channels,
                                bool normalize_extra = true);

}  // namespace tofhair::crf
