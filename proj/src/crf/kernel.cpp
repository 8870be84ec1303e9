#include "tofhair/crf/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace tofhair::crf {

void CrfParams::validate() const {
    if (!(w1 >= 0.0) || !(w2 >= 0.0))
        throw std::invalid_argument("CrfParams: kernel weights must be >= 0");
    if (!(theta_alpha > 0.0) || !(theta_beta > 0.0) || !(theta_gamma > 0.0) ||
        !(theta_delta > 0.0))
        throw std::invalid_argument("CrfParams: bandwidths must be positive");
}

CrfParams CrfParams::unit_smoothness_preset() {
    CrfParams p;
    p.w2 = 1.0;
    p.theta_delta = 1.0;
    return p;
}

double pairwise_kernel(const FeatureField& feats, std::size_t i, std::size_t j,
                       const CrfParams& params) {
    const double* pi = feats.pos(i);
    const double* pj = feats.pos(j);
    double dp2 = (pi[0] - pj[0]) * (pi[0] - pj[0]) + (pi[1] - pj[1]) * (pi[1] - pj[1]);

    const double* ii = feats.rgb(i);
    const double* ij = feats.rgb(j);
    double di2 = 0.0;
    for (int c = 0; c < 3; ++c) di2 += (ii[c] - ij[c]) * (ii[c] - ij[c]);

    double dc2 = 0.0;
    const double* ci = feats.c(i);
    const double* cj = feats.c(j);
    for (int c = 0; c < feats.extra_dim; ++c) dc2 += (ci[c] - cj[c]) * (ci[c] - cj[c]);

    double appearance =
        params.w1 * std::exp(-dp2 / (2.0 * params.theta_alpha * params.theta_alpha) -
                             di2 / (2.0 * params.theta_beta * params.theta_beta) -
                             dc2 / (2.0 * params.theta_gamma * params.theta_gamma));
    double smoothness =
        params.w2 * std::exp(-dp2 / (2.0 * params.theta_delta * params.theta_delta));
    return appearance + smoothness;
}

}  // namespace tofhair::crf
