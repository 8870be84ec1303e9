#include "tofhair/synth/head_scene.hpp"

#include <algorithm>
#include <cmath>

#include "tofhair/core/rng.hpp"

namespace tofhair::synth {

namespace {

struct Ellipse {
    double cx, cy, rx, ry;
    bool contains(double x, double y) const {
        double nx = (x - cx) / rx, ny = (y - cy) / ry;
        return nx * nx + ny * ny <= 1.0;
    }
};

}  // namespace

HeadScene make_head_scene(const HeadSceneParams& p) {
    HeadScene out;
    out.scene = tofsim::SceneSpec(p.width, p.height);
    out.scene.seed = p.seed;
    out.scene.sensor_noise_std = p.sensor_noise_std;
    out.mask = RegionMask(p.width, p.height);

    const Ellipse face{0.5 * p.width, 0.62 * p.height, 0.21 * p.width, 0.26 * p.height};
    const Ellipse outer{0.5 * p.width, 0.50 * p.height, 0.33 * p.width, 0.42 * p.height};
    const double chin_y = face.cy + 0.55 * face.ry;

    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) {
            RegionLabel label = RegionLabel::Background;
            if (face.contains(x, y)) {
                label = RegionLabel::Face;
            } else if (outer.contains(x, y) && y < chin_y) {
                double theta = std::atan2(x - outer.cx, outer.cy - y);  // 0 = up
                if (std::abs(theta) < 0.7)
                    label = RegionLabel::HairTop;
                else if (theta >= 0.7 && theta < 1.9)
                    label = RegionLabel::HairRight;
                else if (theta <= -0.7 && theta > -1.9)
                    label = RegionLabel::HairLeft;
                else
                    label = RegionLabel::HairBack;
            }
            out.mask.set(x, y, label);

            if (label == RegionLabel::Background) {
                out.scene.distance.at(x, y) = p.background_distance;
            } else if (label == RegionLabel::Face) {
                out.scene.distance.at(x, y) = p.face_distance;
            } else {
                out.scene.distance.at(x, y) = p.hair_distance;
                out.scene.material.at(x, y) =
                    static_cast<std::uint8_t>(tofsim::Material::Rough);
                out.scene.sigma_tau.at(x, y) = p.hair_sigma_tau;
                out.scene.path_forks.at(x, y) = p.hair_path_forks;
            }
        }
    return out;
}

RgbImage render_head_rgb(const HeadSceneParams& p, const RegionMask& mask) {
    RgbImage rgb(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) {
            const std::array<std::uint8_t, 3>* base = &p.background_color;
            if (mask.at(x, y) == RegionLabel::Face)
                base = &p.face_color;
            else if (is_hair(mask.at(x, y)))
                base = &p.hair_color;
            PixelRng rng(p.seed ^ 0x52474221ULL, x, y);
            std::uint8_t* px = rgb.px(x, y);
            for (int c = 0; c < 3; ++c) {
                double v = (*base)[static_cast<std::size_t>(c)] +
                           rng.normal() * p.rgb_noise_std;
                px[c] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
            }
        }
    return rgb;
}

}  // namespace tofhair::synth
