#pragma once

#include <vector>

namespace tofhair::tofsim {

/// One light-path contribution: attenuation mass arriving at travel time tau.
struct PathSample {
    double travel_time = 0.0;  // seconds
    double weight = 0.0;       // dimensionless attenuation
};

/// Temporal point spread function: the distribution of returned light energy
/// over travel time. Smooth surfaces reduce to a single sample; scattering
/// media spread mass over many travel times.
struct TemporalPSF {
    enum class Kind { Discrete, Gaussian };

    Kind kind = Kind::Discrete;
    std::vector<PathSample> samples;  // Discrete only

    // Gaussian only
    double mean_travel_time = 0.0;  // seconds
    double sigma_travel_time = 0.0; // seconds
    double total_weight = 0.0;

    static TemporalPSF single_path(double travel_time, double weight);
    static TemporalPSF discrete(std::vector<PathSample> samples);
    static TemporalPSF gaussian(double mean, double sigma, double total_weight);

    /// All travel times >= 0, all weights >= 0, at least one positive weight.
    void validate() const;

    /// Gaussian PSFs are evaluated through a fixed-node discretization over
    /// mean +/- 4 sigma (nodes clamped at zero travel time); discrete PSFs
    /// pass through unchanged.
    std::vector<PathSample> discretized() const;
};

inline constexpr int kGaussianPsfNodes = 33;

}  // namespace tofhair::tofsim
