#include "tofhair/tofsim/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace tofhair::tofsim {

void SceneSpec::validate() const {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("SceneSpec: dimensions must be positive");
    if (distance.width() != width || distance.height() != height ||
        material.width() != width || material.height() != height ||
        sigma_tau.width() != width || sigma_tau.height() != height ||
        path_forks.width() != width || path_forks.height() != height)
        throw std::invalid_argument("SceneSpec: grid dimensions inconsistent");
    if (!(sensor_noise_std >= 0.0) || !std::isfinite(sensor_noise_std))
        throw std::invalid_argument("SceneSpec: sensor_noise_std must be >= 0");
    for (std::size_t i = 0; i < distance.size(); ++i) {
        if (!(distance[i] > 0.0) || !std::isfinite(distance[i]))
            throw std::invalid_argument("SceneSpec: distances must be positive");
        if (material[i] > 1)
            throw std::invalid_argument("SceneSpec: unknown material id");
        if (!(sigma_tau[i] >= 0.0) || !std::isfinite(sigma_tau[i]))
            throw std::invalid_argument("SceneSpec: sigma_tau must be >= 0");
        if (path_forks[i] < 1)
            throw std::invalid_argument("SceneSpec: path_forks must be >= 1");
    }
}

}  // namespace tofhair::tofsim
