#include "tofhair/geomfeat/registration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tofhair::geomfeat {

DepthFrame register_depth_to_rgb(const DepthFrame& depth, const CameraModel& cam,
                                 TargetSize target) {
    cam.validate();
    depth.check();
    if (target.width <= 0 || target.height <= 0)
        throw std::invalid_argument("register_depth_to_rgb: bad target size");

    DepthFrame out(target.width, target.height);
    ImageF zbuf(target.width, target.height, std::numeric_limits<double>::infinity());

    for (int y = 0; y < depth.height; ++y)
        for (int x = 0; x < depth.width; ++x) {
            if (!depth.is_valid(x, y)) continue;
            double z = depth.depth.at(x, y);
            if (z <= 0.0) continue;
            Vec3 p{(x - cam.depth.cx) / cam.depth.fx * z,
                   (y - cam.depth.cy) / cam.depth.fy * z, z};
            Vec3 q = cam.transform(p);
            if (q.z <= 0.0) continue;  // behind the RGB camera
            int u = static_cast<int>(std::lround(cam.rgb.fx * q.x / q.z + cam.rgb.cx));
            int v = static_cast<int>(std::lround(cam.rgb.fy * q.y / q.z + cam.rgb.cy));
            if (u < 0 || u >= target.width || v < 0 || v >= target.height) continue;
            if (q.z < zbuf.at(u, v)) {
                zbuf.at(u, v) = q.z;
                out.set(u, v, q.z);
            }
        }
    return out;
}

}  // namespace tofhair::geomfeat
