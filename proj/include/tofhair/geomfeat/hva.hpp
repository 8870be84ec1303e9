#pragma once

#include "tofhair/core/frame.hpp"
#include "tofhair/geomfeat/camera.hpp"
#include "tofhair/noisemap/variance.hpp"

namespace tofhair::geomfeat {

/// Per-pixel geometric feature triple: Horizontal disparity, depth Variance
/// and the angle between the local surface normal and gravity.
struct HvaChannels {
    int width = 0;
    int height = 0;
    ImageF h;       // pixels
    ImageF v;       // squared meters
    ImageF a;       // radians in [0, pi]
    ImageU8 valid;  // all three channels defined

    HvaChannels() = default;
    HvaChannels(int w, int he)
        : width(w), height(he), h(w, he, 0.0), v(w, he, 0.0), a(w, he, 0.0),
          valid(w, he, 0) {}
};

/// disparity = baseline * focal / depth; invalid where depth is invalid or zero.
struct DisparityMap {
    ImageF values;
    ImageU8 valid;
};

DisparityMap horizontal_disparity(const DepthFrame& depth, const CameraModel& cam);

/// Angle in [0, pi] between the camera-facing surface normal (from
/// central-difference 3-D tangents under the RGB intrinsics) and the gravity
/// direction. Pixels lacking four valid neighbors are invalid.
struct AngleMap {
    ImageF values;
    ImageU8 valid;
};

AngleMap normal_gravity_angle(const DepthFrame& depth, const CameraModel& cam);

/// Stacks disparity, variance and normal angle; all inputs must share the
/// depth frame's grid.
HvaChannels build_hva(const DepthFrame& depth, const CameraModel& cam,
                      const noisemap::VarianceMap& vmap);

}  // namespace tofhair::geomfeat
