#pragma once

#include <cstdint>
#include <string>

namespace tofhair::geomfeat {

/// Hair-strand orientation classes. Ids are the on-disk encoding.
enum class DirectionClass : std::uint8_t {
    Horizontal = 0,
    Longitudinal = 1,
    Leftward = 2,
    Rightward = 3,
};

const char* direction_class_name(DirectionClass c);

/// Quantizes an orientation angle in degrees, [0, 180), into its class:
///   [0, 22.5) and [157.5, 180)  -> horizontal
///   [22.5, 80)                  -> leftward
///   [80, 110]                   -> longitudinal
///   (110, 157.5)                -> rightward
/// Every angle maps to exactly one class.
DirectionClass quantize_direction(double angle_degrees);

}  // namespace tofhair::geomfeat
