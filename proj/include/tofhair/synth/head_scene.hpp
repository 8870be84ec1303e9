#pragma once

#include <array>
#include <cstdint>

#include "tofhair/core/image.hpp"
#include "tofhair/core/region_mask.hpp"
#include "tofhair/tofsim/scene.hpp"

namespace tofhair::synth {

/// Parametric portrait scene: a smooth background plane, a smooth face
/// ellipse and a rough hair cap split into top/back/left/right sectors.
struct HeadSceneParams {
    int width = 64;
    int height = 48;
    double background_distance = 2.5;  // meters
    double face_distance = 1.0;
    double hair_distance = 0.97;
    double hair_sigma_tau = 5e-10;     // seconds (0.5 ns)
    int hair_path_forks = 3;
    double sensor_noise_std = 0.001;   // meters, depth-equivalent
    std::uint64_t seed = 1;

    std::array<std::uint8_t, 3> face_color = {206, 160, 134};
    std::array<std::uint8_t, 3> hair_color = {58, 50, 46};
    std::array<std::uint8_t, 3> background_color = {96, 96, 104};
    double rgb_noise_std = 3.0;        // gray levels per channel
};

struct HeadScene {
    tofsim::SceneSpec scene;
    RegionMask mask;
};

HeadScene make_head_scene(const HeadSceneParams& params);

/// Flat-shaded RGB rendering of the scene regions with seeded per-pixel
/// color jitter.
RgbImage render_head_rgb(const HeadSceneParams& params, const RegionMask& mask);

}  // namespace tofhair::synth
