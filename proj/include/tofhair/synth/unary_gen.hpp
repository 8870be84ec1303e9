#pragma once

#include <cstdint>
#include <vector>

#include "tofhair/core/region_mask.hpp"
#include "tofhair/crf/unary.hpp"

namespace tofhair::synth {

/// Stand-in for an upstream classifier: soft unary potentials derived from
/// a ground-truth mask, with a seeded fraction of pixels flipped to a wrong
/// class.
struct SyntheticUnary {
    crf::UnaryField unary;
    crf::Labeling truth;          // clean per-pixel labels
    crf::Labeling noisy_argmax;   // argmax of the generated unary
    std::vector<std::size_t> flipped;  // pixel indices whose argmax is wrong
};

struct UnaryGenParams {
    double confidence = 0.9;      // probability mass on the argmax class
    double flip_fraction = 0.05;  // fraction of pixels flipped
    std::uint64_t seed = 1;
    bool six_class = false;       // emit the six-class taxonomy instead of
                                  // hair/face/background
};

SyntheticUnary make_synthetic_unary(const RegionMask& mask, const UnaryGenParams& params);

/// Ground-truth labeling in the merged taxonomy (hair, face, background).
crf::Labeling merged_truth(const RegionMask& mask);

}  // namespace tofhair::synth
