#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tofhair/core/region_mask.hpp"
#include "tofhair/noisemap/variance.hpp"

namespace tofhair::noisemap {

/// Binned distribution of variance values over one region.
struct HistogramCurve {
    std::vector<double> bin_edges;       // monotone, size = counts.size() + 1
    std::vector<std::uint64_t> counts;
    std::string region;

    std::uint64_t total() const;
    /// counts / total per bin.
    std::vector<double> normalized() const;
};

inline constexpr int kDefaultHistogramBins = 64;

/// Histogram of vmap values over valid pixels whose mask label is in
/// `region_labels`. Bins span [0, max observed] unless `range_max` overrides
/// the upper edge; the last bin includes its upper edge.
HistogramCurve region_histogram(const VarianceMap& vmap, const RegionMask& mask,
                                const std::vector<RegionLabel>& region_labels,
                                int bins,
                                std::optional<double> range_max = std::nullopt);

/// Bhattacharyya distance -ln sum_i sqrt(p_i * q_i) between the normalized
/// histograms. Zero iff identical after normalization; +infinity when the
/// supports are disjoint.
double separability(const HistogramCurve& a, const HistogramCurve& b);

}  // namespace tofhair::noisemap
