#pragma once

#include "tofhair/core/image.hpp"

namespace tofhair::geomfeat {

/// Sobel responses of the grayscale image, gray-levels per pixel.
struct GradientPair {
    ImageF gx;
    ImageF gy;
};

/// Fixed luma weights (0.299, 0.587, 0.114); output range [0, 255].
ImageF to_grayscale(const RgbImage& rgb);

/// 3x3 Sobel in x and y with clamped border replication.
GradientPair sobel_gradients(const RgbImage& rgb);
GradientPair sobel_gradients(const ImageF& gray);

}  // namespace tofhair::geomfeat
