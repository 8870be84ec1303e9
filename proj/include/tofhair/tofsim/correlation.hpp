#pragma once

#include "tofhair/tofsim/config.hpp"
#include "tofhair/tofsim/psf.hpp"

namespace tofhair::tofsim {

/// Modulated exposure of one correlation tap for a single light path:
///
///   H = alpha * E_m * periods * integral_0^T g(t + tau) f(t + phi/omega) dt
///
/// evaluated by periodic quadrature, plus the dark-current term of the full
/// irradiance (which integrates to zero against the zero-mean reference f).
/// For sinusoidal waveforms this equals
/// alpha * E_m * periods * (T/2) * cos(omega*tau - phi).
double correlate_single_path(const ToFConfig& cfg, double attenuation,
                             double travel_time, double phase_offset);

/// Correlation of a tap against the whole temporal PSF:
/// E_m * sum_tau alpha(tau) * integral g(t+tau) f(t+phi/omega) dt.
/// Reduces exactly to correlate_single_path for a one-sample PSF.
double correlate_multipath(const ToFConfig& cfg, const TemporalPSF& psf,
                           double phase_offset);

/// Phase offsets of the four sampling taps (0, pi/2, pi, 3pi/2).
inline constexpr double kTapOffsets[4] = {0.0, M_PI / 2.0, M_PI, 3.0 * M_PI / 2.0};

/// Correlation value of tap k in {0,1,2,3} for the given PSF. The tap's
/// reference waveform is delayed by its offset (phase lag), which is the
/// convention under which decode_four_samples recovers the travel-time phase
/// with positive sign.
double tap_correlation(const ToFConfig& cfg, const TemporalPSF& psf, int tap);

struct PhaseAmplitude {
    double phase = 0.0;      // radians in [0, 2*pi)
    double amplitude = 0.0;  // correlation units
};

/// Four-sample phase/amplitude decode:
///   phase     = atan2(a4 - a2, a1 - a3) mapped to [0, 2*pi)
///   amplitude = sqrt((a4-a2)^2 + (a1-a3)^2) / 2
/// Throws DegenerateSignalError when both differences vanish.
PhaseAmplitude decode_four_samples(double a1, double a2, double a3, double a4);

/// Travel distance from decoded phase: d = c * T * phase / (4*pi).
double phase_to_depth(double phase, const ToFConfig& cfg);

}  // namespace tofhair::tofsim
