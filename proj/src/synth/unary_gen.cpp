#include "tofhair/synth/unary_gen.hpp"

#include <stdexcept>

#include "tofhair/core/rng.hpp"

namespace tofhair::synth {

namespace {

int merged_id(RegionLabel l) {
    if (is_hair(l)) return 0;                    // hair
    return l == RegionLabel::Face ? 1 : 2;       // face : background
}

}  // namespace

crf::Labeling merged_truth(const RegionMask& mask) {
    crf::Labeling truth;
    truth.labels = crf::kMergedLabels;
    truth.ids = ImageI32(mask.width, mask.height, 0);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            truth.ids.at(x, y) = merged_id(mask.at(x, y));
    return truth;
}

SyntheticUnary make_synthetic_unary(const RegionMask& mask, const UnaryGenParams& p) {
    if (!(p.confidence > 0.0) || !(p.confidence < 1.0))
        throw std::invalid_argument("make_synthetic_unary: confidence must be in (0, 1)");
    if (p.flip_fraction < 0.0 || p.flip_fraction > 1.0)
        throw std::invalid_argument("make_synthetic_unary: flip_fraction out of range");

    const std::vector<std::string>& labels =
        p.six_class ? crf::kSixClassLabels : crf::kMergedLabels;
    const int label_count = static_cast<int>(labels.size());

    SyntheticUnary out;
    out.truth.labels = labels;
    out.truth.ids = ImageI32(mask.width, mask.height, 0);

    std::vector<ImageF> planes(static_cast<std::size_t>(label_count),
                               ImageF(mask.width, mask.height, 0.0));
    double off = (1.0 - p.confidence) / (label_count - 1);

    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) {
            int truth_id = p.six_class ? static_cast<int>(mask.at(x, y))
                                       : merged_id(mask.at(x, y));
            out.truth.ids.at(x, y) = truth_id;

            PixelRng rng(p.seed ^ 0x554e4152ULL, x, y);
            int assigned = truth_id;
            if (rng.uniform() < p.flip_fraction) {
                int wrong = static_cast<int>(rng.below(
                    static_cast<std::uint64_t>(label_count - 1)));
                assigned = wrong >= truth_id ? wrong + 1 : wrong;
                out.flipped.push_back(static_cast<std::size_t>(y) * mask.width + x);
            }
            for (int l = 0; l < label_count; ++l)
                planes[static_cast<std::size_t>(l)].at(x, y) =
                    l == assigned ? p.confidence : off;
        }

    out.unary = crf::UnaryField::from_probabilities(planes, labels);
    out.noisy_argmax = out.unary.argmax_labeling();
    return out;
}

}  // namespace tofhair::synth
