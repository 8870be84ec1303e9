#include "tofhair/crf/mean_field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tofhair/core/error.hpp"
#include "tofhair/core/parallel.hpp"

namespace tofhair::crf {

void Marginals::check() const {
    for (std::size_t i = 0; i < pixel_count(); ++i) {
        double sum = 0.0;
        for (int l = 0; l < label_count(); ++l) {
            double v = at(i, l);
            if (!(v >= 0.0))
                throw std::invalid_argument("Marginals: negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("Marginals: pixel distribution not normalized");
    }
}

Marginals mean_field_infer(const UnaryField& unary, const FeatureField& feats,
                           const CrfParams& params, int iterations, int jobs,
                           std::size_t size_cap) {
    params.validate();
    feats.check();
    if (iterations < 1)
        throw std::invalid_argument("mean_field_infer: iterations must be >= 1");
    const std::size_t n = unary.pixel_count();
    const int labels = unary.label_count();
    if (n == 0 || labels == 0)
        throw std::invalid_argument("mean_field_infer: empty unary field");
    if (feats.pixel_count() != n || feats.width != unary.width())
        throw std::invalid_argument("mean_field_infer: feature dimension mismatch");
    if (n > size_cap)
        throw SizeCapError("mean_field_infer: instance has " + std::to_string(n) +
                           " pixels, cap is " + std::to_string(size_cap));
    for (double v : unary.raw())
        if (!std::isfinite(v))
            throw std::invalid_argument("mean_field_infer: non-finite unary potential");

    Marginals q;
    q.width = unary.width();
    q.height = unary.height();
    q.labels = unary.labels();
    q.q.resize(n * static_cast<std::size_t>(labels));

    auto normalize_pixel = [labels](double* row) {
        double sum = 0.0;
        for (int l = 0; l < labels; ++l) sum += row[l];
        for (int l = 0; l < labels; ++l) row[l] /= sum;
    };

    // initialize from the unary softmax
    for (std::size_t i = 0; i < n; ++i) {
        double* row = q.q.data() + i * static_cast<std::size_t>(labels);
        for (int l = 0; l < labels; ++l) row[l] = std::exp(-unary.potential(i, l));
        normalize_pixel(row);
    }

    // zero kernel weights mean zero messages: every update reproduces the
    // unary softmax, so Q is already the fixed point
    if (params.w1 == 0.0 && params.w2 == 0.0) return q;

    std::vector<double> next(q.q.size());
    for (int it = 0; it < iterations; ++it) {
        parallel_for(n, jobs, [&](std::size_t i) {
            double* out = next.data() + i * static_cast<std::size_t>(labels);
            double msg_total = 0.0;
            for (int l = 0; l < labels; ++l) out[l] = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                double k = pairwise_kernel(feats, i, j, params);
                const double* qj = q.q.data() + j * static_cast<std::size_t>(labels);
                for (int l = 0; l < labels; ++l) out[l] += k * qj[l];
            }
            for (int l = 0; l < labels; ++l) msg_total += out[l];
            // Potts compatibility: a label is penalized by the mass of all
            // other labels' messages; exponents are shifted by their max
            // before exp so large message sums cannot underflow every label
            double max_exponent = -std::numeric_limits<double>::infinity();
            for (int l = 0; l < labels; ++l) {
                out[l] = -unary.potential(i, l) - (msg_total - out[l]);
                if (out[l] > max_exponent) max_exponent = out[l];
            }
            for (int l = 0; l < labels; ++l) out[l] = std::exp(out[l] - max_exponent);
            normalize_pixel(out);
        });
        q.q.swap(next);
    }
    return q;
}

Labeling map_labeling(const Marginals& q) {
    q.check();
    Labeling out;
    out.ids = ImageI32(q.width, q.height, 0);
    out.labels = q.labels;
    for (std::size_t i = 0; i < q.pixel_count(); ++i) {
        int best = 0;
        double best_q = q.at(i, 0);
        for (int l = 1; l < q.label_count(); ++l)
            if (q.at(i, l) > best_q) {
                best_q = q.at(i, l);
                best = l;
            }
        out.ids[i] = best;
    }
    return out;
}

}  // namespace tofhair::crf
