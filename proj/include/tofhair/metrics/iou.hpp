#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tofhair/core/image.hpp"

namespace tofhair::metrics {

struct LabelIoU {
    int label = 0;
    std::string name;
    std::uint64_t intersection = 0;
    std::uint64_t set_union = 0;
    double iou = 1.0;
};

/// Per-label IoU plus their unweighted mean over the evaluated label set.
struct EvalReport {
    std::vector<LabelIoU> per_label;
    double miou = 0.0;
};

/// |pred==label AND gt==label| / |pred==label OR gt==label|. A label absent
/// from both masks scores 1.0 by convention, keeping the mean defined on
/// sparse scenes.
double iou(const ImageI32& pred, const ImageI32& gt, int label);

/// Unweighted mean of iou over `labels` (must be nonempty).
double miou(const ImageI32& pred, const ImageI32& gt, const std::vector<int>& labels);

EvalReport evaluate(const ImageI32& pred, const ImageI32& gt,
                    const std::vector<int>& labels,
                    const std::vector<std::string>& names = {});

}  // namespace tofhair::metrics
