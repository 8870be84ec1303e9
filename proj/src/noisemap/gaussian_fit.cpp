#include "tofhair/noisemap/gaussian_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tofhair::noisemap {

namespace {

double normal_cdf(double x, double mean, double std) {
    if (std == 0.0) return x >= mean ? 1.0 : 0.0;
    return 0.5 * std::erfc(-(x - mean) / (std * std::sqrt(2.0)));
}

}  // namespace

GaussianFit fit_gaussian(std::span<const double> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_gaussian: need at least 2 samples");

    GaussianFit fit;
    double n = static_cast<double>(samples.size());
    for (double s : samples) fit.mean += s;
    fit.mean /= n;
    double var = 0.0;
    for (double s : samples) var += (s - fit.mean) * (s - fit.mean);
    fit.std = std::sqrt(var / n);

    constexpr int kBins = 64;
    auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) hi = lo + 1.0;  // all samples identical: one occupied bin
    double width = (hi - lo) / kBins;

    double counts[kBins] = {};
    for (double s : samples) {
        int b = static_cast<int>((s - lo) / width);
        counts[std::clamp(b, 0, kBins - 1)] += 1.0;
    }
    int mean_bin = std::clamp(static_cast<int>((fit.mean - lo) / width), 0, kBins - 1);
    for (int b = 0; b < kBins; ++b) {
        double expected;
        if (fit.std == 0.0)
            expected = b == mean_bin ? n : 0.0;  // degenerate fit: a point mass
        else
            expected = n * (normal_cdf(lo + (b + 1) * width, fit.mean, fit.std) -
                            normal_cdf(lo + b * width, fit.mean, fit.std));
        double diff = counts[b] - expected;
        fit.residual += diff * diff;
    }
    return fit;
}

}  // namespace tofhair::noisemap
