#pragma once

#include "tofhair/core/frame.hpp"
#include "tofhair/geomfeat/camera.hpp"

namespace tofhair::geomfeat {

struct TargetSize {
    int width = 0;
    int height = 0;
};

/// Reprojects a depth frame into the RGB pixel grid: back-project every valid
/// depth pixel with the depth intrinsics, apply the rigid transform, project
/// with the RGB intrinsics, and z-buffer collisions (nearest surface wins).
/// Target pixels no source maps onto stay holes.
DepthFrame register_depth_to_rgb(const DepthFrame& depth, const CameraModel& cam,
                                 TargetSize target);

}  // namespace tofhair::geomfeat
