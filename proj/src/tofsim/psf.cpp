#include "tofhair/tofsim/psf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tofhair/core/error.hpp"

namespace tofhair::tofsim {

TemporalPSF TemporalPSF::single_path(double travel_time, double weight) {
    TemporalPSF psf;
    psf.kind = Kind::Discrete;
    psf.samples = {{travel_time, weight}};
    return psf;
}

TemporalPSF TemporalPSF::discrete(std::vector<PathSample> samples) {
    TemporalPSF psf;
    psf.kind = Kind::Discrete;
    psf.samples = std::move(samples);
    return psf;
}

TemporalPSF TemporalPSF::gaussian(double mean, double sigma, double total_weight) {
    TemporalPSF psf;
    psf.kind = Kind::Gaussian;
    psf.mean_travel_time = mean;
    psf.sigma_travel_time = sigma;
    psf.total_weight = total_weight;
    return psf;
}

void TemporalPSF::validate() const {
    if (kind == Kind::Discrete) {
        if (samples.empty())
            throw std::invalid_argument("TemporalPSF: empty path set");
        bool any_positive = false;
        for (const auto& s : samples) {
            if (!std::isfinite(s.travel_time) || s.travel_time < 0.0)
                throw std::invalid_argument("TemporalPSF: travel times must be >= 0");
            if (!std::isfinite(s.weight) || s.weight < 0.0)
                throw std::invalid_argument("TemporalPSF: weights must be >= 0");
            any_positive |= s.weight > 0.0;
        }
        if (!any_positive)
            throw std::invalid_argument("TemporalPSF: needs a positive-weight path");
    } else {
        if (!std::isfinite(mean_travel_time) || mean_travel_time < 0.0)
            throw std::invalid_argument("TemporalPSF: mean travel time must be >= 0");
        if (!std::isfinite(sigma_travel_time) || sigma_travel_time < 0.0)
            throw std::invalid_argument("TemporalPSF: sigma must be >= 0");
        if (!std::isfinite(total_weight) || total_weight <= 0.0)
            throw std::invalid_argument("TemporalPSF: total weight must be positive");
    }
}

std::vector<PathSample> TemporalPSF::discretized() const {
    validate();
    if (kind == Kind::Discrete) return samples;
    if (sigma_travel_time == 0.0)
        return {{mean_travel_time, total_weight}};

    std::vector<PathSample> nodes(kGaussianPsfNodes);
    double span = 8.0 * sigma_travel_time;
    double step = span / (kGaussianPsfNodes - 1);
    double sum = 0.0;
    for (int k = 0; k < kGaussianPsfNodes; ++k) {
        double tau = mean_travel_time - 4.0 * sigma_travel_time + k * step;
        double z = (tau - mean_travel_time) / sigma_travel_time;
        nodes[static_cast<std::size_t>(k)].travel_time = std::max(0.0, tau);
        nodes[static_cast<std::size_t>(k)].weight = std::exp(-0.5 * z * z);
        sum += nodes[static_cast<std::size_t>(k)].weight;
    }
    for (auto& n : nodes) n.weight *= total_weight / sum;
    return nodes;
}

}  // namespace tofhair::tofsim
