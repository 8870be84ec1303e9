#include "tofhair/tofsim/simulate.hpp"

#include <cmath>
#include <vector>

#include "tofhair/core/error.hpp"
#include "tofhair/core/parallel.hpp"
#include "tofhair/core/rng.hpp"
#include "tofhair/tofsim/correlation.hpp"

namespace tofhair::tofsim {

namespace {

/// Correlation-sample noise std that produces the requested depth-equivalent
/// noise std, from first-order propagation through the four-sample decode.
double sample_noise_std(const SceneSpec& scene, const ToFConfig& cfg) {
    if (scene.sensor_noise_std <= 0.0) return 0.0;
    double amplitude = cfg.modulated_amplitude * cfg.modulation_period *
                       cfg.exposure_periods / 2.0;
    return scene.sensor_noise_std * (4.0 * M_PI) /
           (cfg.light_speed * cfg.modulation_period) * std::sqrt(2.0) * amplitude;
}

}  // namespace

SimulatedFrame simulate_frame(const SceneSpec& scene, const ToFConfig& cfg, int jobs) {
    scene.validate();
    cfg.validate();

    SimulatedFrame out;
    out.phases = FourPhaseFrame(scene.width, scene.height);
    out.depth = DepthFrame(scene.width, scene.height);

    const double noise_std = sample_noise_std(scene, cfg);

    parallel_for(static_cast<std::size_t>(scene.height), jobs, [&](std::size_t row) {
        int y = static_cast<int>(row);
        for (int x = 0; x < scene.width; ++x) {
            PixelRng rng(scene.seed, x, y);
            double direct_tau = 2.0 * scene.distance.at(x, y) / cfg.light_speed;

            TemporalPSF psf;
            if (scene.material_at(x, y) == Material::Smooth) {
                psf = TemporalPSF::single_path(direct_tau, 1.0);
            } else {
                int forks = scene.path_forks.at(x, y);
                double spread = scene.sigma_tau.at(x, y);
                std::vector<PathSample> paths(static_cast<std::size_t>(forks));
                for (auto& p : paths) {
                    // scattering only lengthens paths: half-normal extra delay
                    p.travel_time = direct_tau + std::abs(rng.normal()) * spread;
                    p.weight = 1.0 / forks;
                }
                psf = TemporalPSF::discrete(std::move(paths));
            }

            double samples[4];
            for (int tap = 0; tap < 4; ++tap)
                samples[tap] = tap_correlation(cfg, psf, tap);
            if (noise_std > 0.0)
                for (int tap = 0; tap < 4; ++tap)
                    samples[tap] += rng.normal() * noise_std;

            for (int tap = 0; tap < 4; ++tap)
                out.phases.taps[static_cast<std::size_t>(tap)].at(x, y) = samples[tap];

            try {
                PhaseAmplitude pa =
                    decode_four_samples(samples[0], samples[1], samples[2], samples[3]);
                out.depth.set(x, y, phase_to_depth(pa.phase, cfg));
            } catch (const DegenerateSignalError&) {
                out.depth.set_hole(x, y);
            }
        }
    });

    return out;
}

}  // namespace tofhair::tofsim
