#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tofhair/core/error.hpp"
#include "tofhair/core/rng.hpp"
#include "tofhair/noisemap/gaussian_fit.hpp"
#include "tofhair/noisemap/histogram.hpp"
#include "tofhair/noisemap/variance.hpp"
#include "tofhair/tofsim/simulate.hpp"

using namespace tofhair;
using namespace tofhair::noisemap;

namespace {

// Brute-force re-evaluation of the windowed weighted variance at one pixel,
// written independently of the library path.
struct OracleResult {
    double value = 0.0;
    bool valid = false;
    double deviation_sum = 0.0;  // before the valid-count division
};

OracleResult oracle_variance_at(const DepthFrame& f, int cx, int cy, int win,
                                double sigma, bool weighted_mean) {
    if (sigma <= 0.0) sigma = win / 4.0;
    int r = win / 2;
    double wsum = 0.0, wmean = 0.0, plain_mean = 0.0;
    int count = 0;
    for (int y = cy - r; y <= cy + r; ++y)
        for (int x = cx - r; x <= cx + r; ++x) {
            if (!f.depth.in_bounds(x, y) || !f.is_valid(x, y)) continue;
            double w = std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) /
                                (2.0 * sigma * sigma));
            wsum += w;
            wmean += w * f.depth.at(x, y);
            plain_mean += f.depth.at(x, y);
            ++count;
        }
    OracleResult res;
    if (count == 0) return res;
    res.valid = true;
    double mean = weighted_mean ? wmean / wsum : plain_mean / count;
    for (int y = cy - r; y <= cy + r; ++y)
        for (int x = cx - r; x <= cx + r; ++x) {
            if (!f.depth.in_bounds(x, y) || !f.is_valid(x, y)) continue;
            double w = std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) /
                                (2.0 * sigma * sigma)) / wsum;
            res.deviation_sum += w * (f.depth.at(x, y) - mean) * (f.depth.at(x, y) - mean);
        }
    res.value = res.deviation_sum / count;
    return res;
}

DepthFrame random_frame(int w, int h, std::uint64_t seed, double hole_fraction = 0.0) {
    DepthFrame f(w, h);
    PixelRng rng(seed);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (hole_fraction > 0.0 && rng.uniform() < hole_fraction)
                f.set_hole(x, y);
            else
                f.set(x, y, rng.uniform(1.0, 2.0));
        }
    return f;
}

}  // namespace

TEST_CASE("variance map basics") {
    SUBCASE("constant frame has zero variance") {
        DepthFrame f(10, 10);
        for (int y = 0; y < 10; ++y)
            for (int x = 0; x < 10; ++x) f.set(x, y, 5.0);
        VarianceMap vm = variance_map(f, 5, 1.0);
        for (std::size_t i = 0; i < vm.values.size(); ++i) {
            CHECK(vm.valid[i]);
            CHECK(std::abs(vm.values[i]) < 1e-24);
        }
    }
    SUBCASE("uniform-weight 3x3 window on values 1..9") {
        DepthFrame f(3, 3);
        for (int y = 0; y < 3; ++y)
            for (int x = 0; x < 3; ++x) f.set(x, y, 1.0 + y * 3 + x);
        // huge sigma makes the window weights uniform; the weighted
        // deviation sum (before the count division) is then the population
        // variance 60/9
        VarianceMap vm = variance_map(f, 3, 1e9);
        CHECK(std::abs(vm.values.at(1, 1) * 9.0 - 60.0 / 9.0) < 1e-12);
    }
    SUBCASE("even or tiny windows are rejected") {
        DepthFrame f = random_frame(8, 8, 1);
        CHECK_THROWS_AS(variance_map(f, 4, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(variance_map(f, 1, 1.0), std::invalid_argument);
    }
    SUBCASE("fully invalid frame is an error") {
        DepthFrame f(8, 8);  // all holes
        CHECK_THROWS_AS(variance_map(f, 3, 1.0), EmptyRegionError);
    }
}

TEST_CASE("variance map equals the brute-force window evaluation") {
    for (std::uint64_t seed : {10u, 11u, 12u}) {
        DepthFrame f = random_frame(16, 16, seed, seed == 12u ? 0.2 : 0.0);
        for (bool weighted : {true, false}) {
            VarianceMap vm = variance_map(f, 5, 1.2, weighted);
            for (int y = 0; y < 16; ++y)
                for (int x = 0; x < 16; ++x) {
                    OracleResult want = oracle_variance_at(f, x, y, 5, 1.2, weighted);
                    CHECK(static_cast<bool>(vm.valid.at(x, y)) == want.valid);
                    if (want.valid)
                        CHECK(std::abs(vm.values.at(x, y) - want.value) <= 1e-12);
                }
        }
    }
}

TEST_CASE("variance map invariances") {
    DepthFrame f = random_frame(16, 16, 21);
    VarianceMap base = variance_map(f, 7, 0.0);

    SUBCASE("adding a constant depth changes nothing") {
        DepthFrame shifted = f;
        for (std::size_t i = 0; i < shifted.depth.size(); ++i)
            shifted.depth[i] += 3.25;
        VarianceMap vm = variance_map(shifted, 7, 0.0);
        for (std::size_t i = 0; i < vm.values.size(); ++i)
            CHECK(std::abs(vm.values[i] - base.values[i]) <= 1e-12);
    }
    SUBCASE("scaling depth scales variance by the square") {
        DepthFrame scaled = f;
        for (std::size_t i = 0; i < scaled.depth.size(); ++i)
            scaled.depth[i] *= 2.5;
        VarianceMap vm = variance_map(scaled, 7, 0.0);
        for (std::size_t i = 0; i < vm.values.size(); ++i)
            CHECK(std::abs(vm.values[i] - 6.25 * base.values[i]) <=
                  1e-9 * std::max(1.0, std::abs(6.25 * base.values[i])));
    }
    SUBCASE("translation shifts interior values bit-identically") {
        DepthFrame moved(18, 18);
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x) moved.set(x + 2, y + 2, f.depth.at(x, y));
        VarianceMap vm = variance_map(moved, 7, 0.0);
        // compare pixels whose windows stay inside both frames
        for (int y = 3; y < 13; ++y)
            for (int x = 3; x < 13; ++x)
                CHECK(vm.values.at(x + 2, y + 2) == base.values.at(x, y));
    }
}

TEST_CASE("multiscale variance") {
    SUBCASE("constant frame stays zero") {
        DepthFrame f(12, 12);
        for (int y = 0; y < 12; ++y)
            for (int x = 0; x < 12; ++x) f.set(x, y, 2.0);
        VarianceMap vm = multiscale_variance(f, 0.0);
        for (std::size_t i = 0; i < vm.values.size(); ++i)
            CHECK(std::abs(vm.values[i]) < 1e-24);
    }
    SUBCASE("equals the explicit mean of the four windows") {
        DepthFrame f = random_frame(32, 32, 31);
        VarianceMap vm = multiscale_variance(f, 1.5);
        for (int y = 0; y < 32; ++y)
            for (int x = 0; x < 32; ++x) {
                double mean = 0.0;
                for (int w : kMultiscaleWindows)
                    mean += variance_map(f, w, 1.5).values.at(x, y);
                mean /= 4.0;
                CHECK(std::abs(vm.values.at(x, y) - mean) <= 1e-12);
            }
    }
    SUBCASE("small frames are rejected") {
        DepthFrame f = random_frame(10, 12, 5);
        CHECK_THROWS_AS(multiscale_variance(f, 0.0), std::invalid_argument);
    }
}

TEST_CASE("region histogram") {
    VarianceMap vm(5, 4);
    RegionMask mask(5, 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 5; ++x) {
            vm.valid.at(x, y) = 1;
            vm.values.at(x, y) = 0.5;
            if (y < 2) mask.set(x, y, RegionLabel::Face);
        }

    SUBCASE("point mass lands in one bin") {
        HistogramCurve curve =
            region_histogram(vm, mask, {RegionLabel::Face}, 2, 1.0);
        REQUIRE(curve.counts.size() == 2);
        CHECK(curve.counts[0] == 0);
        CHECK(curve.counts[1] == 10);
        CHECK(curve.region == "face");
    }
    SUBCASE("counts conserve the region size") {
        PixelRng rng(9);
        for (std::size_t i = 0; i < vm.values.size(); ++i)
            vm.values[i] = rng.uniform(0.0, 2.0);
        HistogramCurve curve = region_histogram(vm, mask, {RegionLabel::Face}, 7);
        CHECK(curve.total() == 10);
    }
    SUBCASE("empty region throws") {
        CHECK_THROWS_AS(region_histogram(vm, mask, {RegionLabel::HairTop}, 4),
                        EmptyRegionError);
    }
}

TEST_CASE("hair histogram sits above the face histogram on a simulated frame") {
    tofsim::SceneSpec scene(48, 32);
    RegionMask mask(48, 32);
    scene.seed = 13;
    scene.sensor_noise_std = 0.001;
    scene.distance.fill(1.0);
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 48; ++x) {
            if (x < 24) {
                mask.set(x, y, RegionLabel::Face);
            } else {
                mask.set(x, y, RegionLabel::HairTop);
                scene.material.at(x, y) =
                    static_cast<std::uint8_t>(tofsim::Material::Rough);
                scene.sigma_tau.at(x, y) = 5e-10;
                scene.path_forks.at(x, y) = 3;
            }
        }
    tofsim::ToFConfig cfg;
    tofsim::SimulatedFrame frame = tofsim::simulate_frame(scene, cfg);
    VarianceMap vm = multiscale_variance(frame.depth, 0.0);

    double max_v = 0.0;
    for (std::size_t i = 0; i < vm.values.size(); ++i)
        if (vm.valid[i]) max_v = std::max(max_v, vm.values[i]);
    HistogramCurve face =
        region_histogram(vm, mask, {RegionLabel::Face}, 64, max_v);
    HistogramCurve hair =
        region_histogram(vm, mask, {RegionLabel::HairTop}, 64, max_v);

    auto histogram_mean = [](const HistogramCurve& c) {
        double acc = 0.0;
        for (std::size_t b = 0; b < c.counts.size(); ++b)
            acc += 0.5 * (c.bin_edges[b] + c.bin_edges[b + 1]) *
                   static_cast<double>(c.counts[b]);
        return acc / static_cast<double>(c.total());
    };
    CHECK(histogram_mean(hair) > 5.0 * histogram_mean(face));
    CHECK(separability(face, hair) > 0.5);
}

TEST_CASE("gaussian fit") {
    SUBCASE("degenerate samples") {
        const double samples[] = {2.0, 2.0, 2.0};
        GaussianFit fit = fit_gaussian(samples);
        CHECK(fit.mean == doctest::Approx(2.0));
        CHECK(fit.std == 0.0);
        CHECK(fit.residual == doctest::Approx(0.0));
    }
    SUBCASE("two-point moments") {
        const double samples[] = {0.0, 2.0};
        GaussianFit fit = fit_gaussian(samples);
        CHECK(fit.mean == doctest::Approx(1.0));
        CHECK(fit.std == doctest::Approx(1.0));
    }
    SUBCASE("recovers seeded normal parameters") {
        PixelRng rng(17);
        std::vector<double> samples(100000);
        for (double& s : samples) s = rng.normal(3.0, 0.5);
        GaussianFit fit = fit_gaussian(samples);
        CHECK(std::abs(fit.mean - 3.0) < 0.01);
        CHECK(std::abs(fit.std - 0.5) < 0.01);
    }
    SUBCASE("too few samples") {
        const double one[] = {1.0};
        CHECK_THROWS_AS(fit_gaussian(one), std::invalid_argument);
    }
}

TEST_CASE("separability") {
    auto curve = [](std::vector<std::uint64_t> counts) {
        HistogramCurve c;
        c.counts = std::move(counts);
        c.bin_edges.resize(c.counts.size() + 1);
        for (std::size_t i = 0; i < c.bin_edges.size(); ++i)
            c.bin_edges[i] = static_cast<double>(i);
        return c;
    };

    SUBCASE("identical histograms score zero") {
        HistogramCurve a = curve({3, 5, 9});
        CHECK(separability(a, a) <= 1e-12);
    }
    SUBCASE("disjoint histograms score infinity") {
        CHECK(std::isinf(separability(curve({4, 0}), curve({0, 9}))));
    }
    SUBCASE("hand-computed two-bin value") {
        // p = (0.5, 0.5), q = (0.9, 0.1):
        // -ln(sqrt(0.45) + sqrt(0.05)) = 0.11157177565710485
        double d = separability(curve({5, 5}), curve({9, 1}));
        CHECK(std::abs(d - 0.11157177565710485) < 1e-12);
    }
    SUBCASE("symmetry") {
        HistogramCurve a = curve({1, 2, 3, 4});
        HistogramCurve b = curve({4, 1, 1, 4});
        CHECK(separability(a, b) == separability(b, a));
    }
    SUBCASE("mismatched bins throw") {
        CHECK_THROWS_AS(separability(curve({1, 2}), curve({1, 2, 3})),
                        std::invalid_argument);
    }
}
