#include "tofhair/tofsim/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "tofhair/core/error.hpp"

namespace tofhair::tofsim {

namespace {

double waveform_value(Waveform w, double omega, double t) {
    double c = std::cos(omega * t);
    if (w == Waveform::Sinusoidal) return c;
    return c >= 0.0 ? 1.0 : -1.0;
}

/// periods * integral_0^T (E_0 + scale * g(t + tau)) * f(t + shift) dt
/// with uniform nodes over one period. For band-limited integrands this
/// periodic rule is exact to rounding once the node count exceeds twice the
/// highest harmonic.
double exposure_integral(const ToFConfig& cfg, double dark, double scale,
                         double tau, double shift) {
    const double T = cfg.modulation_period;
    const double omega = cfg.omega();
    const int n = cfg.quadrature_steps;
    const double h = T / n;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        double t = (k + 0.5) * h;
        double irradiance = dark + scale * waveform_value(cfg.waveform, omega, t + tau);
        acc += irradiance * waveform_value(cfg.waveform, omega, t + shift);
    }
    return acc * h * cfg.exposure_periods;
}

}  // namespace

double correlate_single_path(const ToFConfig& cfg, double attenuation,
                             double travel_time, double phase_offset) {
    cfg.validate();
    if (!std::isfinite(attenuation) || !std::isfinite(travel_time) ||
        !std::isfinite(phase_offset))
        throw std::invalid_argument("correlate_single_path: non-finite input");
    if (travel_time < 0.0)
        throw std::invalid_argument("correlate_single_path: travel_time must be >= 0");
    double shift = phase_offset / cfg.omega();
    return exposure_integral(cfg, cfg.dark_current,
                             attenuation * cfg.modulated_amplitude, travel_time,
                             shift);
}

double correlate_multipath(const ToFConfig& cfg, const TemporalPSF& psf,
                           double phase_offset) {
    cfg.validate();
    if (!std::isfinite(phase_offset))
        throw std::invalid_argument("correlate_multipath: non-finite phase offset");
    psf.validate();
    double shift = phase_offset / cfg.omega();
    double acc = 0.0;
    bool first = true;
    for (const PathSample& s : psf.discretized()) {
        // dark current enters the exposure once, not once per path
        double dark = first ? cfg.dark_current : 0.0;
        first = false;
        acc += exposure_integral(cfg, dark, s.weight * cfg.modulated_amplitude,
                                 s.travel_time, shift);
    }
    return acc;
}

double tap_correlation(const ToFConfig& cfg, const TemporalPSF& psf, int tap) {
    if (tap < 0 || tap > 3)
        throw std::invalid_argument("tap_correlation: tap must be in [0, 3]");
    return correlate_multipath(cfg, psf, -kTapOffsets[tap]);
}

PhaseAmplitude decode_four_samples(double a1, double a2, double a3, double a4) {
    if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3) ||
        !std::isfinite(a4))
        throw std::invalid_argument("decode_four_samples: non-finite sample");
    double dy = a4 - a2;
    double dx = a1 - a3;
    if (dy == 0.0 && dx == 0.0)
        throw DegenerateSignalError("decode_four_samples: zero amplitude");
    double phase = std::atan2(dy, dx);
    if (phase < 0.0) phase += 2.0 * M_PI;
    if (phase >= 2.0 * M_PI) phase = 0.0;
    return {phase, std::hypot(dy, dx) / 2.0};
}

double phase_to_depth(double phase, const ToFConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(phase) || phase < 0.0)
        throw std::invalid_argument("phase_to_depth: phase must be >= 0");
    return cfg.light_speed * cfg.modulation_period * phase / (4.0 * M_PI);
}

}  // namespace tofhair::tofsim
