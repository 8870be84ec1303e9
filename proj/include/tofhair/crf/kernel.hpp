#pragma once

#include <cstddef>

#include "tofhair/crf/features.hpp"

namespace tofhair::crf {

/// Weights and bandwidths of the two pairwise Gaussian kernels: an
/// appearance kernel over (position, color, extra features) and a
/// smoothness kernel over position alone.
struct CrfParams {
    double w1 = 1.0;           // appearance kernel weight, >= 0
    double w2 = 1.0;           // smoothness kernel weight, >= 0
    double theta_alpha = 25.0; // appearance spatial bandwidth, pixels
    double theta_beta = 25.0;  // intensity bandwidth
    double theta_gamma = 35.0; // extra-feature bandwidth
    double theta_delta = 45.0; // smoothness spatial bandwidth, pixels

    void validate() const;

    /// Alternative preset with unit smoothness weight and bandwidth.
    static CrfParams unit_smoothness_preset();
};

/// Combined pairwise kernel between pixels i and j of the feature field:
///
///   k = w1 * exp(-|pi-pj|^2 / 2ta^2 - |Ii-Ij|^2 / 2tb^2 - |Ci-Cj|^2 / 2tg^2)
///     + w2 * exp(-|pi-pj|^2 / 2td^2)
///
/// Euclidean distances throughout; symmetric in (i, j) by construction.
double pairwise_kernel(const FeatureField& feats, std::size_t i, std::size_t j,
                       const CrfParams& params);

}  // namespace tofhair::crf
