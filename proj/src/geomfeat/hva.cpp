#include "tofhair/geomfeat/hva.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tofhair::geomfeat {

DisparityMap horizontal_disparity(const DepthFrame& depth, const CameraModel& cam) {
    cam.validate();
    DisparityMap out{ImageF(depth.width, depth.height, 0.0),
                     ImageU8(depth.width, depth.height, 0)};
    for (int y = 0; y < depth.height; ++y)
        for (int x = 0; x < depth.width; ++x) {
            if (!depth.is_valid(x, y) || depth.depth.at(x, y) == 0.0) continue;
            out.values.at(x, y) = cam.baseline * cam.focal / depth.depth.at(x, y);
            out.valid.at(x, y) = 1;
        }
    return out;
}

namespace {

Vec3 backproject(const DepthFrame& depth, const Intrinsics& k, int x, int y) {
    double z = depth.depth.at(x, y);
    return {(x - k.cx) / k.fx * z, (y - k.cy) / k.fy * z, z};
}

}  // namespace

AngleMap normal_gravity_angle(const DepthFrame& depth, const CameraModel& cam) {
    cam.validate();
    AngleMap out{ImageF(depth.width, depth.height, 0.0),
                 ImageU8(depth.width, depth.height, 0)};
    for (int y = 0; y < depth.height; ++y)
        for (int x = 0; x < depth.width; ++x) {
            if (x == 0 || x == depth.width - 1 || y == 0 || y == depth.height - 1)
                continue;
            if (!depth.is_valid(x - 1, y) || !depth.is_valid(x + 1, y) ||
                !depth.is_valid(x, y - 1) || !depth.is_valid(x, y + 1))
                continue;
            Vec3 tx = backproject(depth, cam.rgb, x + 1, y) -
                      backproject(depth, cam.rgb, x - 1, y);
            Vec3 ty = backproject(depth, cam.rgb, x, y + 1) -
                      backproject(depth, cam.rgb, x, y - 1);
            Vec3 n = tx.cross(ty);
            double len = n.norm();
            if (len == 0.0) continue;
            n = n * (1.0 / len);
            if (n.z > 0.0) n = n * -1.0;  // orient toward the camera
            double c = std::clamp(n.dot(cam.gravity), -1.0, 1.0);
            out.values.at(x, y) = std::acos(c);
            out.valid.at(x, y) = 1;
        }
    return out;
}

HvaChannels build_hva(const DepthFrame& depth, const CameraModel& cam,
                      const noisemap::VarianceMap& vmap) {
    if (vmap.width != depth.width || vmap.height != depth.height)
        throw std::invalid_argument("build_hva: variance map dimension mismatch");
    DisparityMap disp = horizontal_disparity(depth, cam);
    AngleMap angle = normal_gravity_angle(depth, cam);

    HvaChannels out(depth.width, depth.height);
    for (int y = 0; y < depth.height; ++y)
        for (int x = 0; x < depth.width; ++x) {
            out.h.at(x, y) = disp.values.at(x, y);
            out.v.at(x, y) = vmap.values.at(x, y);
            out.a.at(x, y) = angle.values.at(x, y);
            out.valid.at(x, y) = disp.valid.at(x, y) && vmap.valid.at(x, y) &&
                                 angle.valid.at(x, y);
        }
    return out;
}

}  // namespace tofhair::geomfeat
