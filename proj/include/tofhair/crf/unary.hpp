#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tofhair/core/image.hpp"

namespace tofhair::crf {

/// Per-pixel label assignment. `ids` index into `labels`.
struct Labeling {
    ImageI32 ids;
    std::vector<std::string> labels;

    int width() const { return ids.width(); }
    int height() const { return ids.height(); }
};

inline constexpr double kProbabilityFloor = 1e-12;

/// Per-pixel, per-label potentials phi(x_i) = -ln P(x_i), built from
/// normalized class scores. Storage is pixel-major: value(i, l).
class UnaryField {
public:
    UnaryField() = default;

    /// `planes[l]` holds P(label l) per pixel; per-pixel probabilities must
    /// sum to 1 within 1e-6. Probabilities are clamped to >= 1e-12 before
    /// the -ln transform so potentials stay finite.
    static UnaryField from_probabilities(const std::vector<ImageF>& planes,
                                         std::vector<std::string> labels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }
    int label_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    double potential(std::size_t pixel, int label) const {
        return values_[pixel * static_cast<std::size_t>(labels_.size()) +
                       static_cast<std::size_t>(label)];
    }

    /// Probability plane for one label (exp(-potential)).
    ImageF probability_plane(int label) const;

    int label_index(const std::string& name) const;  // -1 when absent

    /// Per-pixel argmin of the potentials (= argmax probability),
    /// ties broken toward the lowest label index.
    Labeling argmax_labeling() const;

    const std::vector<double>& raw() const { return values_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> values_;  // pixel-major
};

/// The six-class head taxonomy expected by merge_hair_labels.
extern const std::vector<std::string> kSixClassLabels;
/// Output taxonomy of merge_hair_labels.
extern const std::vector<std::string> kMergedLabels;  // hair, face, background

/// Collapses the four hair classes into one by summing their probabilities
/// per pixel; face and background pass through. Throws std::invalid_argument
/// unless the input carries exactly the six-class taxonomy.
UnaryField merge_hair_labels(const UnaryField& six_class);

}  // namespace tofhair::crf
