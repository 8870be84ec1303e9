#include "tofhair/crf/energy.hpp"

#include <stdexcept>
#include <string>

#include "tofhair/core/error.hpp"

namespace tofhair::crf {

double gibbs_energy(const Labeling& labeling, const UnaryField& unary,
                    const FeatureField& feats, const CrfParams& params,
                    std::size_t size_cap) {
    params.validate();
    feats.check();
    std::size_t n = unary.pixel_count();
    if (labeling.ids.size() != n || feats.pixel_count() != n ||
        labeling.width() != unary.width())
        throw std::invalid_argument("gibbs_energy: dimension mismatch");
    if (n > size_cap)
        throw SizeCapError("gibbs_energy: instance has " + std::to_string(n) +
                           " pixels, cap is " + std::to_string(size_cap));

    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        int label = labeling.ids[i];
        if (label < 0 || label >= unary.label_count())
            throw std::invalid_argument("gibbs_energy: label id out of range");
        energy += unary.potential(i, label);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labeling.ids[i] != labeling.ids[j])
                energy += pairwise_kernel(feats, i, j, params);
    return energy;
}

}  // namespace tofhair::crf
