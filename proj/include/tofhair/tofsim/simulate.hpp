#pragma once

#include <array>

#include "tofhair/core/frame.hpp"
#include "tofhair/core/image.hpp"
#include "tofhair/tofsim/config.hpp"
#include "tofhair/tofsim/scene.hpp"

namespace tofhair::tofsim {

/// Raw correlation measurements at the four tap offsets (0, pi/2, pi, 3pi/2).
struct FourPhaseFrame {
    int width = 0;
    int height = 0;
    std::array<ImageF, 4> taps;

    FourPhaseFrame() = default;
    FourPhaseFrame(int w, int h)
        : width(w), height(h),
          taps{ImageF(w, h), ImageF(w, h), ImageF(w, h), ImageF(w, h)} {}
};

struct SimulatedFrame {
    FourPhaseFrame phases;
    DepthFrame depth;
};

/// Renders the scene through the correlation-pixel model and decodes depth.
/// Smooth pixels see a single path with travel time 2*d/c; rough pixels see
/// a pixel-specific multi-path PSF. Per-pixel randomness is counter-based on
/// (seed, x, y): output is bit-identical for any job count and across runs.
/// Pixels whose four samples carry no signal become holes.
SimulatedFrame simulate_frame(const SceneSpec& scene, const ToFConfig& cfg,
                              int jobs = 1);

}  // namespace tofhair::tofsim
