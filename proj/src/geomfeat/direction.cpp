#include "tofhair/geomfeat/direction.hpp"

#include <cmath>
#include <stdexcept>

namespace tofhair::geomfeat {

const char* direction_class_name(DirectionClass c) {
    switch (c) {
        case DirectionClass::Horizontal: return "horizontal";
        case DirectionClass::Longitudinal: return "longitudinal";
        case DirectionClass::Leftward: return "leftward";
        case DirectionClass::Rightward: return "rightward";
    }
    return "unknown";
}

DirectionClass quantize_direction(double angle_degrees) {
    if (!std::isfinite(angle_degrees) || angle_degrees < 0.0 || angle_degrees >= 180.0)
        throw std::invalid_argument("quantize_direction: angle must be in [0, 180)");
    if (angle_degrees < 22.5 || angle_degrees >= 157.5)
        return DirectionClass::Horizontal;
    if (angle_degrees < 80.0)
        return DirectionClass::Leftward;
    if (angle_degrees <= 110.0)
        return DirectionClass::Longitudinal;
    return DirectionClass::Rightward;
}

}  // namespace tofhair::geomfeat
