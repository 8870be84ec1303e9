#pragma once

#include "tofhair/crf/kernel.hpp"
#include "tofhair/crf/unary.hpp"

namespace tofhair::crf {

/// Pixel-count cap for the exact O(N^2) energy evaluation.
inline constexpr std::size_t kDefaultEnergySizeCap = 64 * 64;

/// Gibbs energy of a labeling:
///
///   E(x) = sum_i phi(x_i) + sum_{i<j} [x_i != x_j] * k(f_i, f_j)
///
/// with Potts compatibility. Exact pairwise evaluation; throws SizeCapError
/// above `size_cap` pixels rather than truncating.
double gibbs_energy(const Labeling& labeling, const UnaryField& unary,
                    const FeatureField& feats, const CrfParams& params,
                    std::size_t size_cap = kDefaultEnergySizeCap);

}  // namespace tofhair::crf
