#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tofhair/core/error.hpp"
#include "tofhair/core/rng.hpp"
#include "tofhair/tofsim/correlation.hpp"
#include "tofhair/tofsim/simulate.hpp"

using namespace tofhair;
using namespace tofhair::tofsim;

namespace {

// Independent oracle: composite Simpson evaluation of the modulated exposure
// integral, kept separate from the quadrature in the library.
double simpson_exposure(const ToFConfig& cfg, double attenuation, double tau,
                        double phase_offset, int intervals = 20000) {
    const double T = cfg.modulation_period;
    const double omega = cfg.omega();
    const double shift = phase_offset / omega;
    auto wave = [&](double t) {
        double c = std::cos(omega * t);
        return cfg.waveform == Waveform::Sinusoidal ? c : (c >= 0.0 ? 1.0 : -1.0);
    };
    auto integrand = [&](double t) {
        return (cfg.dark_current +
                attenuation * cfg.modulated_amplitude * wave(t + tau)) *
               wave(t + shift);
    };
    double h = T / intervals;
    double acc = integrand(0.0) + integrand(T);
    for (int k = 1; k < intervals; ++k)
        acc += integrand(k * h) * (k % 2 ? 4.0 : 2.0);
    return acc * h / 3.0 * cfg.exposure_periods;
}

ToFConfig test_config() {
    ToFConfig cfg;
    cfg.modulation_period = 5e-8;
    cfg.modulated_amplitude = 1.0;
    cfg.dark_current = 0.3;
    cfg.quadrature_steps = 256;
    return cfg;
}

}  // namespace

TEST_CASE("single-path correlation matches the closed cosine form") {
    ToFConfig cfg = test_config();
    const double half_period_gain = cfg.modulation_period / 2.0;

    SUBCASE("aligned tap returns T/2") {
        for (double phi : {0.0, 0.7, M_PI / 2, 2.5}) {
            double tau = phi / cfg.omega();
            double h = correlate_single_path(cfg, 1.0, tau, phi);
            CHECK(std::abs(h - half_period_gain) <= 1e-12 * half_period_gain);
        }
    }
    SUBCASE("zero attenuation returns zero") {
        double h = correlate_single_path(cfg, 0.0, 1e-8, 0.3);
        CHECK(std::abs(h) < 1e-20);
    }
    SUBCASE("quarter-period offset returns zero") {
        double phi = 0.4;
        double tau = (phi + M_PI / 2) / cfg.omega();
        double h = correlate_single_path(cfg, 1.0, tau, phi);
        CHECK(std::abs(h) < 1e-8 * half_period_gain);
        CHECK(std::abs(h - simpson_exposure(cfg, 1.0, tau, phi)) <=
              1e-10 * half_period_gain);
    }
}

TEST_CASE("single-path correlation agrees with an independent integrator") {
    ToFConfig cfg = test_config();
    PixelRng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        double alpha = rng.uniform(0.0, 2.0);
        double tau = rng.uniform(0.0, cfg.modulation_period);
        double phi = rng.uniform(0.0, 2.0 * M_PI);
        double got = correlate_single_path(cfg, alpha, tau, phi);
        double want = simpson_exposure(cfg, alpha, tau, phi);
        CHECK(std::abs(got - want) <= 1e-18);
        // and both agree with the analytic value
        double analytic = alpha * cfg.modulation_period / 2.0 *
                          std::cos(cfg.omega() * tau - phi);
        CHECK(std::abs(got - analytic) <= 1e-18);
    }
}

TEST_CASE("rectangle waveform correlates to the triangle overlap") {
    ToFConfig cfg = test_config();
    cfg.waveform = Waveform::Rectangle;
    cfg.quadrature_steps = 4096;
    const double T = cfg.modulation_period;
    PixelRng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        double tau = rng.uniform(0.0, T);
        double delta = std::fmod(tau, T);
        if (delta > T / 2) delta = T - delta;
        double analytic = T * (1.0 - 4.0 * delta / T);
        double got = correlate_single_path(cfg, 1.0, tau, 0.0);
        CHECK(std::abs(got - analytic) <= 2e-3 * T);
    }
}

TEST_CASE("single-path correlation rejects bad input") {
    ToFConfig cfg = test_config();
    CHECK_THROWS_AS(correlate_single_path(cfg, std::nan(""), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(correlate_single_path(cfg, 1.0, -1e-9, 0.0),
                    std::invalid_argument);
    cfg.quadrature_steps = 32;
    CHECK_THROWS_AS(correlate_single_path(cfg, 1.0, 0.0, 0.0), ConfigError);
}

TEST_CASE("multipath correlation") {
    ToFConfig cfg = test_config();
    const double tau0 = 8e-9;

    SUBCASE("one-sample PSF equals the single-path value") {
        TemporalPSF psf = TemporalPSF::single_path(tau0, 0.8);
        for (double phi : {0.0, 1.0, 4.0})
            CHECK(correlate_multipath(cfg, psf, phi) ==
                  correlate_single_path(cfg, 0.8, tau0, phi));
    }
    SUBCASE("half-period pair cancels") {
        TemporalPSF psf = TemporalPSF::discrete(
            {{tau0, 0.5}, {tau0 + cfg.modulation_period / 2.0, 0.5}});
        CHECK(std::abs(correlate_multipath(cfg, psf, 0.7)) < 1e-20);
    }
    SUBCASE("narrow gaussian converges to the single path") {
        TemporalPSF narrow = TemporalPSF::gaussian(tau0, 1e-12, 1.0);
        double got = correlate_multipath(cfg, narrow, 0.4);
        double want = correlate_single_path(cfg, 1.0, tau0, 0.4);
        CHECK(std::abs(got - want) < 1e-6);
    }
    SUBCASE("empty PSF throws") {
        TemporalPSF empty;
        CHECK_THROWS_AS(correlate_multipath(cfg, empty, 0.0), std::invalid_argument);
    }
}

TEST_CASE("multipath correlation is linear in the PSF") {
    ToFConfig cfg = test_config();
    PixelRng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PathSample> a, b;
        for (int k = 0; k < 3; ++k) {
            a.push_back({rng.uniform(0.0, 4e-8), rng.uniform(0.0, 1.0)});
            b.push_back({rng.uniform(0.0, 4e-8), rng.uniform(0.0, 1.0)});
        }
        std::vector<PathSample> both = a;
        both.insert(both.end(), b.begin(), b.end());
        double phi = rng.uniform(0.0, 2.0 * M_PI);
        double sum = correlate_multipath(cfg, TemporalPSF::discrete(a), phi) +
                     correlate_multipath(cfg, TemporalPSF::discrete(b), phi);
        double joint = correlate_multipath(cfg, TemporalPSF::discrete(both), phi);
        CHECK(std::abs(joint - sum) <= 1e-12);
    }
}

TEST_CASE("four-sample decode") {
    SUBCASE("axis-aligned samples") {
        PhaseAmplitude pa = decode_four_samples(2, 1, 0, 1);
        CHECK(pa.phase == doctest::Approx(0.0));
        CHECK(pa.amplitude == doctest::Approx(1.0));
    }
    SUBCASE("diagonal samples") {
        PhaseAmplitude pa = decode_four_samples(3, 1, 1, 3);
        CHECK(pa.phase == doctest::Approx(M_PI / 4));
        CHECK(pa.amplitude == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("flat samples are degenerate") {
        CHECK_THROWS_AS(decode_four_samples(1, 1, 1, 1), DegenerateSignalError);
    }
    SUBCASE("phase stays in [0, 2pi)") {
        PhaseAmplitude pa = decode_four_samples(0, 1, 0, -1);  // pure -sin
        CHECK(pa.phase >= 0.0);
        CHECK(pa.phase < 2.0 * M_PI);
        CHECK(pa.phase == doctest::Approx(1.5 * M_PI));
    }
    SUBCASE("adding a constant to all samples changes nothing") {
        PixelRng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            double a1 = rng.uniform(-1.0, 1.0), a2 = rng.uniform(-1.0, 1.0);
            double a3 = rng.uniform(-1.0, 1.0), a4 = rng.uniform(-1.0, 1.0);
            if (a4 - a2 == 0.0 && a1 - a3 == 0.0) continue;
            double c = rng.uniform(-10.0, 10.0);
            PhaseAmplitude base = decode_four_samples(a1, a2, a3, a4);
            PhaseAmplitude shifted = decode_four_samples(a1 + c, a2 + c, a3 + c, a4 + c);
            CHECK(shifted.amplitude ==
                  doctest::Approx(base.amplitude).epsilon(1e-9));
            CHECK(shifted.phase == doctest::Approx(base.phase).epsilon(1e-9));
        }
    }
}

TEST_CASE("phase to depth") {
    ToFConfig cfg = test_config();
    cfg.light_speed = 3e8;
    CHECK(phase_to_depth(0.0, cfg) == 0.0);
    CHECK(phase_to_depth(M_PI / 2, cfg) == doctest::Approx(1.875).epsilon(1e-12));
    CHECK_THROWS_AS(phase_to_depth(-0.1, cfg), std::invalid_argument);
}

TEST_CASE("noiseless tap-decode roundtrip recovers depth") {
    ToFConfig cfg = test_config();
    SUBCASE("single distance") {
        double d = 1.2;
        TemporalPSF psf = TemporalPSF::single_path(2.0 * d / cfg.light_speed, 1.0);
        double taps[4];
        for (int k = 0; k < 4; ++k) taps[k] = tap_correlation(cfg, psf, k);
        PhaseAmplitude pa = decode_four_samples(taps[0], taps[1], taps[2], taps[3]);
        CHECK(phase_to_depth(pa.phase, cfg) == doctest::Approx(d).epsilon(1e-6));
    }
    SUBCASE("random distances over the unambiguous range") {
        PixelRng rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            double d = rng.uniform(1e-3, cfg.unambiguous_range() * 0.999);
            TemporalPSF psf = TemporalPSF::single_path(2.0 * d / cfg.light_speed, 1.0);
            double taps[4];
            for (int k = 0; k < 4; ++k) taps[k] = tap_correlation(cfg, psf, k);
            PhaseAmplitude pa = decode_four_samples(taps[0], taps[1], taps[2], taps[3]);
            double recovered = phase_to_depth(pa.phase, cfg);
            CHECK(std::abs(recovered - d) / d < 1e-6);
        }
    }
}

TEST_CASE("simulate_frame") {
    ToFConfig cfg = test_config();

    SUBCASE("noiseless smooth scene decodes to the true plane") {
        SceneSpec scene(8, 6);
        scene.distance.fill(1.5);
        SimulatedFrame frame = simulate_frame(scene, cfg);
        for (int y = 0; y < 6; ++y)
            for (int x = 0; x < 8; ++x) {
                REQUIRE(frame.depth.is_valid(x, y));
                CHECK(frame.depth.depth.at(x, y) == doctest::Approx(1.5).epsilon(1e-6));
            }
    }

    SUBCASE("rough region is noisier than smooth region") {
        SceneSpec scene(64, 32);  // 1024 pixels per half
        scene.seed = 5;
        scene.sensor_noise_std = 0.001;
        scene.distance.fill(1.0);
        for (int y = 0; y < 32; ++y)
            for (int x = 32; x < 64; ++x) {
                scene.material.at(x, y) = static_cast<std::uint8_t>(Material::Rough);
                scene.sigma_tau.at(x, y) = 5e-10;
                scene.path_forks.at(x, y) = 3;
            }
        SimulatedFrame frame = simulate_frame(scene, cfg);
        auto sample_variance = [&](int x0, int x1) {
            double mean = 0.0, var = 0.0;
            int n = 0;
            for (int y = 0; y < 32; ++y)
                for (int x = x0; x < x1; ++x)
                    if (frame.depth.is_valid(x, y)) {
                        mean += frame.depth.depth.at(x, y);
                        ++n;
                    }
            mean /= n;
            for (int y = 0; y < 32; ++y)
                for (int x = x0; x < x1; ++x)
                    if (frame.depth.is_valid(x, y)) {
                        double diff = frame.depth.depth.at(x, y) - mean;
                        var += diff * diff;
                    }
            return var / n;
        };
        double smooth_var = sample_variance(0, 32);
        double rough_var = sample_variance(32, 64);
        CHECK(rough_var > 5.0 * smooth_var);
    }

    SUBCASE("same seed reproduces bit-identical frames") {
        SceneSpec scene(16, 12);
        scene.seed = 77;
        scene.sensor_noise_std = 0.002;
        scene.distance.fill(1.1);
        for (int y = 0; y < 12; ++y)
            for (int x = 0; x < 8; ++x) {
                scene.material.at(x, y) = static_cast<std::uint8_t>(Material::Rough);
                scene.sigma_tau.at(x, y) = 4e-10;
                scene.path_forks.at(x, y) = 2;
            }
        SimulatedFrame a = simulate_frame(scene, cfg, 1);
        SimulatedFrame b = simulate_frame(scene, cfg, 4);
        CHECK(a.depth.depth == b.depth.depth);
        CHECK(a.depth.valid == b.depth.valid);
        for (int k = 0; k < 4; ++k)
            CHECK(a.phases.taps[k] == b.phases.taps[k]);
    }

    SUBCASE("signal-free pixels become holes") {
        SceneSpec scene(4, 4);
        scene.distance.fill(1.0);
        ToFConfig dead = cfg;
        dead.modulated_amplitude = 0.0;
        dead.dark_current = 0.0;
        SimulatedFrame frame = simulate_frame(scene, dead);
        CHECK(frame.depth.valid_count() == 0);
    }
}
