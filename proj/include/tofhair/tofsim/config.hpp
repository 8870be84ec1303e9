#pragma once

#include <cmath>
#include <string>

namespace tofhair::tofsim {

/// Shape of the emitted modulation and the zero-mean pixel reference.
enum class Waveform {
    Sinusoidal,
    Rectangle,
};

Waveform waveform_from_name(const std::string& name);
const char* waveform_name(Waveform w);

/// Continuous-wave modulation parameters of the correlation pixel.
struct ToFConfig {
    double modulation_period = 5e-8;      // T, seconds (20 MHz default)
    double modulated_amplitude = 1.0;     // E_m, irradiance units
    double dark_current = 0.0;            // E_0, irradiance units
    double light_speed = 2.99792458e8;    // c, m/s
    int quadrature_steps = 256;           // integration samples per period
    Waveform waveform = Waveform::Sinusoidal;
    double exposure_periods = 1.0;        // integration spans this many periods

    double modulation_frequency() const { return 1.0 / modulation_period; }
    double omega() const { return 2.0 * M_PI / modulation_period; }

    /// Maximum depth encodable in one period before phase wrapping.
    double unambiguous_range() const { return light_speed * modulation_period / 2.0; }

    /// Throws ConfigError when out of range.
    void validate() const;
};

inline constexpr int kMinQuadratureSteps = 64;

}  // namespace tofhair::tofsim
