#include "tofhair/crf/unary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tofhair::crf {

const std::vector<std::string> kSixClassLabels = {
    "background", "face", "hair_top", "hair_back", "hair_left", "hair_right"};
const std::vector<std::string> kMergedLabels = {"hair", "face", "background"};

UnaryField UnaryField::from_probabilities(const std::vector<ImageF>& planes,
                                          std::vector<std::string> labels) {
    if (planes.empty() || planes.size() != labels.size())
        throw std::invalid_argument("UnaryField: need one plane per label");
    const ImageF& first = planes.front();
    if (first.empty())
        throw std::invalid_argument("UnaryField: empty planes");
    for (const auto& p : planes)
        if (!p.same_size(first))
            throw std::invalid_argument("UnaryField: plane dimensions differ");

    UnaryField field;
    field.width_ = first.width();
    field.height_ = first.height();
    field.labels_ = std::move(labels);
    field.values_.resize(field.pixel_count() * planes.size());

    for (std::size_t i = 0; i < field.pixel_count(); ++i) {
        double sum = 0.0;
        for (const auto& p : planes) {
            if (!std::isfinite(p[i]) || p[i] < 0.0)
                throw std::invalid_argument("UnaryField: probabilities must be in [0, 1]");
            sum += p[i];
        }
        if (std::abs(sum - 1.0) > 1e-6)
            throw std::invalid_argument(
                "UnaryField: per-pixel probabilities must sum to 1");
        for (std::size_t l = 0; l < planes.size(); ++l)
            field.values_[i * planes.size() + l] =
                -std::log(std::max(planes[l][i], kProbabilityFloor));
    }
    return field;
}

ImageF UnaryField::probability_plane(int label) const {
    if (label < 0 || label >= label_count())
        throw std::invalid_argument("UnaryField: label index out of range");
    ImageF plane(width_, height_);
    for (std::size_t i = 0; i < pixel_count(); ++i)
        plane[i] = std::exp(-potential(i, label));
    return plane;
}

int UnaryField::label_index(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Labeling UnaryField::argmax_labeling() const {
    Labeling out;
    out.ids = ImageI32(width_, height_, 0);
    out.labels = labels_;
    for (std::size_t i = 0; i < pixel_count(); ++i) {
        int best = 0;
        double best_potential = potential(i, 0);
        for (int l = 1; l < label_count(); ++l)
            if (potential(i, l) < best_potential) {
                best_potential = potential(i, l);
                best = l;
            }
        out.ids[i] = best;
    }
    return out;
}

UnaryField merge_hair_labels(const UnaryField& six_class) {
    if (six_class.labels() != kSixClassLabels)
        throw std::invalid_argument(
            "merge_hair_labels: input must carry the six-class taxonomy");

    std::vector<ImageF> planes;
    planes.reserve(kMergedLabels.size());
    ImageF hair(six_class.width(), six_class.height(), 0.0);
    for (const char* name : {"hair_top", "hair_back", "hair_left", "hair_right"}) {
        ImageF part = six_class.probability_plane(six_class.label_index(name));
        for (std::size_t i = 0; i < hair.size(); ++i) hair[i] += part[i];
    }
    planes.push_back(std::move(hair));
    planes.push_back(six_class.probability_plane(six_class.label_index("face")));
    planes.push_back(six_class.probability_plane(six_class.label_index("background")));

    // clamping at the floor can leave per-pixel sums fractionally off 1
    for (std::size_t i = 0; i < planes[0].size(); ++i) {
        double sum = planes[0][i] + planes[1][i] + planes[2][i];
        for (auto& p : planes) p[i] /= sum;
    }
    return UnaryField::from_probabilities(planes, kMergedLabels);
}

}  // namespace tofhair::crf
