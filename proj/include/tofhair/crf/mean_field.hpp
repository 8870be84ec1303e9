#pragma once

#include <vector>

#include "tofhair/crf/kernel.hpp"
#include "tofhair/crf/unary.hpp"

namespace tofhair::crf {

/// Fully factorized approximate posterior Q_i(l). Pixel-major storage; each
/// pixel's distribution sums to 1 within 1e-9.
struct Marginals {
    int width = 0;
    int height = 0;
    std::vector<std::string> labels;
    std::vector<double> q;  // pixel-major

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    int label_count() const { return static_cast<int>(labels.size()); }

    double at(std::size_t pixel, int label) const {
        return q[pixel * labels.size() + static_cast<std::size_t>(label)];
    }

    void check() const;
};

inline constexpr int kDefaultMeanFieldIterations = 10;
inline constexpr std::size_t kDefaultInferenceSizeCap = 96 * 96;

/// Mean-field inference over the fully connected CRF with Potts
/// compatibility. Q starts from the unary softmax; each iteration runs exact
/// O(N^2) message passing
///
///   m_i(l) = sum_{j != i} k(f_i, f_j) Q_j(l)
///
/// followed by the synchronous update
/// Q_i(l) ∝ exp(-phi_i(l) - sum_{l' != l} m_i(l')) and renormalization.
/// Deterministic for any job count.
Marginals mean_field_infer(const UnaryField& unary, const FeatureField& feats,
                           const CrfParams& params,
                           int iterations = kDefaultMeanFieldIterations,
                           int jobs = 1,
                           std::size_t size_cap = kDefaultInferenceSizeCap);

/// Per-pixel argmax decode; ties break toward the lowest label index.
Labeling map_labeling(const Marginals& q);

}  // namespace tofhair::crf
