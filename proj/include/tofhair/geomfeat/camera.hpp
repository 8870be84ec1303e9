#pragma once

#include <array>

namespace tofhair::geomfeat {

/// Pinhole intrinsics in pixels.
struct Intrinsics {
    double fx = 500.0;
    double fy = 500.0;
    double cx = 0.0;
    double cy = 0.0;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Vec3 normalized() const;
};

/// Rigid depth->RGB transform plus the stereo quantities used for disparity
/// and the gravity direction in camera coordinates (image x right, y down,
/// z into the scene).
struct CameraModel {
    Intrinsics rgb;
    Intrinsics depth;
    std::array<double, 9> rotation = {1, 0, 0, 0, 1, 0, 0, 0, 1};  // row-major
    Vec3 translation;                 // meters, depth -> RGB
    double baseline = 0.05;           // meters
    double focal = 500.0;             // pixels, disparity conversion
    Vec3 gravity = {0.0, -1.0, 0.0};  // unit vector; default: camera "up"

    Vec3 rotate(const Vec3& p) const {
        return {rotation[0] * p.x + rotation[1] * p.y + rotation[2] * p.z,
                rotation[3] * p.x + rotation[4] * p.y + rotation[5] * p.z,
                rotation[6] * p.x + rotation[7] * p.y + rotation[8] * p.z};
    }

    Vec3 transform(const Vec3& p) const { return rotate(p) + translation; }

    /// Rotation orthonormal to 1e-9, positive focal lengths, unit gravity.
    void validate() const;
};

}  // namespace tofhair::geomfeat
