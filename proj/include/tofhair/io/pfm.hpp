#pragma once

#include <array>
#include <string>

#include "tofhair/core/image.hpp"

namespace tofhair::io {

/// Portable float map, single channel ("Pf"), little-endian (scale -1.0).
/// Scanlines are stored bottom-to-top per the format; in memory row 0 is the
/// top of the image.
void write_pfm(const std::string& path, const ImageF& img);
ImageF read_pfm(const std::string& path);

/// Three-channel float map ("PF"), sample order r,g,b per pixel.
void write_pfm3(const std::string& path, const std::array<ImageF, 3>& planes);
std::array<ImageF, 3> read_pfm3(const std::string& path);

}  // namespace tofhair::io
