#include "tofhair/crf/features.hpp"

#include <cmath>
#include <stdexcept>

namespace tofhair::crf {

void FeatureField::check() const {
    std::size_t n = pixel_count();
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("FeatureField: empty field");
    if (position.size() != 2 * n || intensity.size() != 3 * n ||
        extra.size() != static_cast<std::size_t>(extra_dim) * n)
        throw std::invalid_argument("FeatureField: storage sizes inconsistent");
    for (double v : position)
        if (!std::isfinite(v)) throw std::invalid_argument("FeatureField: non-finite position");
    for (double v : intensity)
        if (!std::isfinite(v)) throw std::invalid_argument("FeatureField: non-finite intensity");
    for (double v : extra)
        if (!std::isfinite(v)) throw std::invalid_argument("FeatureField: non-finite extra feature");
}

FeatureField make_feature_field(const RgbImage& rgb,
                                const std::vector<ImageF>& extra_channels,
                                bool normalize_extra) {
    if (rgb.width <= 0 || rgb.height <= 0)
        throw std::invalid_argument("make_feature_field: empty image");
    for (const auto& ch : extra_channels)
        if (ch.width() != rgb.width || ch.height() != rgb.height)
            throw std::invalid_argument("make_feature_field: channel dimension mismatch");

    FeatureField f;
    f.width = rgb.width;
    f.height = rgb.height;
    f.extra_dim = static_cast<int>(extra_channels.size());
    std::size_t n = f.pixel_count();
    f.position.resize(2 * n);
    f.intensity.resize(3 * n);
    f.extra.resize(extra_channels.size() * n);

    for (int y = 0; y < rgb.height; ++y)
        for (int x = 0; x < rgb.width; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * rgb.width + x;
            f.position[2 * i] = x;
            f.position[2 * i + 1] = y;
            const std::uint8_t* p = rgb.px(x, y);
            f.intensity[3 * i] = p[0];
            f.intensity[3 * i + 1] = p[1];
            f.intensity[3 * i + 2] = p[2];
        }

    for (std::size_t c = 0; c < extra_channels.size(); ++c) {
        const auto& ch = extra_channels[c];
        double mean = 0.0, var = 0.0;
        if (normalize_extra) {
            for (std::size_t i = 0; i < n; ++i) mean += ch[i];
            mean /= static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i)
                var += (ch[i] - mean) * (ch[i] - mean);
            var /= static_cast<double>(n);
        }
        double inv_std = var > 0.0 ? 1.0 / std::sqrt(var) : 0.0;
        for (std::size_t i = 0; i < n; ++i)
            f.extra[i * extra_channels.size() + c] =
                normalize_extra ? (ch[i] - mean) * inv_std : ch[i];
    }
    f.check();
    return f;
}

}  // namespace tofhair::crf
