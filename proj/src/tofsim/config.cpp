#include "tofhair/tofsim/config.hpp"

#include <cmath>

#include "tofhair/core/error.hpp"

namespace tofhair::tofsim {

Waveform waveform_from_name(const std::string& name) {
    if (name == "sinusoidal") return Waveform::Sinusoidal;
    if (name == "rectangle") return Waveform::Rectangle;
    throw ConfigError("unknown waveform: " + name);
}

const char* waveform_name(Waveform w) {
    return w == Waveform::Sinusoidal ? "sinusoidal" : "rectangle";
}

void ToFConfig::validate() const {
    if (!(modulation_period > 0.0) || !std::isfinite(modulation_period))
        throw ConfigError("ToFConfig: modulation_period must be positive");
    if (!(modulated_amplitude >= 0.0) || !std::isfinite(modulated_amplitude))
        throw ConfigError("ToFConfig: modulated_amplitude must be >= 0");
    if (!std::isfinite(dark_current))
        throw ConfigError("ToFConfig: dark_current must be finite");
    if (!(light_speed > 0.0))
        throw ConfigError("ToFConfig: light_speed must be positive");
    if (quadrature_steps < kMinQuadratureSteps)
        throw ConfigError("ToFConfig: quadrature_steps must be >= 64");
    if (!(exposure_periods > 0.0))
        throw ConfigError("ToFConfig: exposure_periods must be positive");
}

}  // namespace tofhair::tofsim
