#pragma once

#include <cstdint>

#include "tofhair/core/image.hpp"

namespace tofhair::tofsim {

enum class Material : std::uint8_t {
    Smooth = 0,  // single light path (skin, flat background)
    Rough = 1,   // scattering medium, multiple random paths (hair)
};

/// Ground-truth scene description feeding the simulator. Rough pixels draw
/// `path_forks` extra light paths whose additional travel time is half-normal
/// with spread sigma_tau; smooth pixels return along the direct path only.
struct SceneSpec {
    int width = 0;
    int height = 0;
    ImageF distance;          // true distance in meters, > 0
    ImageU8 material;         // Material enum per pixel
    ImageF sigma_tau;         // rough-path time spread in seconds, >= 0
    ImageI32 path_forks;      // number of light paths per rough pixel, >= 1
    double sensor_noise_std = 0.0;  // depth-equivalent noise std in meters
    std::uint64_t seed = 0;

    SceneSpec() = default;
    SceneSpec(int w, int h)
        : width(w), height(h), distance(w, h, 1.0),
          material(w, h, static_cast<std::uint8_t>(Material::Smooth)),
          sigma_tau(w, h, 0.0), path_forks(w, h, 1) {}

    Material material_at(int x, int y) const {
        return static_cast<Material>(material.at(x, y));
    }

    void validate() const;
};

}  // namespace tofhair::tofsim
