#pragma once

#include <cmath>
#include <stdexcept>

#include "tofhair/core/image.hpp"

namespace tofhair {

/// Per-pixel depth in meters with a validity mask. Invalid pixels are holes
/// (no usable return); their depth value is unspecified and must not be read.
struct DepthFrame {
    int width = 0;
    int height = 0;
    ImageF depth;
    ImageU8 valid;  // 0 = hole, nonzero = valid

    DepthFrame() = default;
    DepthFrame(int w, int h)
        : width(w), height(h), depth(w, h, 0.0), valid(w, h, 0) {}

    bool is_valid(int x, int y) const { return valid.at(x, y) != 0; }

    void set(int x, int y, double d) {
        depth.at(x, y) = d;
        valid.at(x, y) = 1;
    }

    void set_hole(int x, int y) {
        depth.at(x, y) = 0.0;
        valid.at(x, y) = 0;
    }

    std::size_t valid_count() const {
        std::size_t n = 0;
        for (auto v : valid.data()) n += (v != 0);
        return n;
    }

    /// Depth must be finite and non-negative wherever valid.
    void check() const {
        if (width <= 0 || height <= 0 || !depth.same_size(valid))
            throw std::invalid_argument("DepthFrame: inconsistent dimensions");
        for (std::size_t i = 0; i < depth.size(); ++i) {
            if (valid[i] && (!std::isfinite(depth[i]) || depth[i] < 0.0))
                throw std::invalid_argument("DepthFrame: invalid depth at valid pixel");
        }
    }
};

}  // namespace tofhair
