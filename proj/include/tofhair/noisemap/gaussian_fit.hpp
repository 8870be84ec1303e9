#pragma once

#include <span>
#include <vector>

namespace tofhair::noisemap {

/// Maximum-likelihood Gaussian over a sample set. `residual` is the sum of
/// squared errors between the 64-bin sample histogram and the counts the
/// fitted Gaussian predicts for the same bins.
struct GaussianFit {
    double mean = 0.0;
    double std = 0.0;  // population std
    double residual = 0.0;
};

GaussianFit fit_gaussian(std::span<const double> samples);

}  // namespace tofhair::noisemap
