#include "tofhair/geomfeat/gradients.hpp"

#include <algorithm>
#include <stdexcept>

namespace tofhair::geomfeat {

ImageF to_grayscale(const RgbImage& rgb) {
    if (rgb.width <= 0 || rgb.height <= 0)
        throw std::invalid_argument("to_grayscale: empty image");
    ImageF gray(rgb.width, rgb.height);
    for (int y = 0; y < rgb.height; ++y)
        for (int x = 0; x < rgb.width; ++x) {
            const std::uint8_t* p = rgb.px(x, y);
            gray.at(x, y) = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        }
    return gray;
}

GradientPair sobel_gradients(const ImageF& gray) {
    if (gray.empty()) throw std::invalid_argument("sobel_gradients: empty image");
    const int w = gray.width(), h = gray.height();
    GradientPair out{ImageF(w, h, 0.0), ImageF(w, h, 0.0)};
    auto sample = [&](int x, int y) {
        return gray.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1));
    };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double tl = sample(x - 1, y - 1), tc = sample(x, y - 1), tr = sample(x + 1, y - 1);
            double ml = sample(x - 1, y), mr = sample(x + 1, y);
            double bl = sample(x - 1, y + 1), bc = sample(x, y + 1), br = sample(x + 1, y + 1);
            out.gx.at(x, y) = (tr + 2.0 * mr + br) - (tl + 2.0 * ml + bl);
            out.gy.at(x, y) = (bl + 2.0 * bc + br) - (tl + 2.0 * tc + tr);
        }
    return out;
}

GradientPair sobel_gradients(const RgbImage& rgb) {
    return sobel_gradients(to_grayscale(rgb));
}

}  // namespace tofhair::geomfeat
