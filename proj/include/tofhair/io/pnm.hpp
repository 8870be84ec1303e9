#pragma once

#include <string>

#include "tofhair/core/image.hpp"

namespace tofhair::io {

/// Binary PGM (P5, maxval 255). Used for validity masks (0/255), region
/// masks (label ids) and decoded labelings (label indices).
void write_pgm(const std::string& path, const ImageU8& img);
ImageU8 read_pgm(const std::string& path);

/// Binary PPM (P6, maxval 255).
void write_ppm(const std::string& path, const RgbImage& img);
RgbImage read_ppm(const std::string& path);

}  // namespace tofhair::io
