#include "tofhair/geomfeat/camera.hpp"

#include <cmath>
#include <stdexcept>

namespace tofhair::geomfeat {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("Vec3: cannot normalize zero vector");
    return {x / n, y / n, z / n};
}

void CameraModel::validate() const {
    if (!(rgb.fx > 0.0) || !(rgb.fy > 0.0) || !(depth.fx > 0.0) || !(depth.fy > 0.0))
        throw std::invalid_argument("CameraModel: focal lengths must be positive");
    if (!(baseline > 0.0) || !(focal > 0.0))
        throw std::invalid_argument("CameraModel: baseline and focal must be positive");
    // R * R^T == I within 1e-9
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k)
                dot += rotation[static_cast<std::size_t>(3 * i + k)] *
                       rotation[static_cast<std::size_t>(3 * j + k)];
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-9)
                throw std::invalid_argument("CameraModel: rotation not orthonormal");
        }
    if (std::abs(gravity.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("CameraModel: gravity must be a unit vector");
}

}  // namespace tofhair::geomfeat
