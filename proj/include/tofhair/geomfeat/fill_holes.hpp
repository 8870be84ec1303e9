#pragma once

#include "tofhair/core/frame.hpp"
#include "tofhair/core/region_mask.hpp"

namespace tofhair::geomfeat {

/// Fills depth holes inside labeled (non-background) regions with the
/// Gaussian-weighted mean of valid neighbors sharing the hole's mask label,
/// searched over an expanding window. Holes are processed in increasing
/// distance-to-nearest-valid order (ties by scan order) so earlier fills can
/// seed later ones; the pass is sequential and deterministic. Background
/// holes stay invalid. Originally valid pixels are never modified.
///
/// Throws UnfillableRegionError when a labeled region contains holes but no
/// valid pixel anywhere.
DepthFrame fill_holes(const DepthFrame& depth, const RegionMask& mask, double sigma);

}  // namespace tofhair::geomfeat
