#include "tofhair/metrics/iou.hpp"

#include <stdexcept>

namespace tofhair::metrics {

namespace {

LabelIoU count_label(const ImageI32& pred, const ImageI32& gt, int label) {
    if (!pred.same_size(gt) || pred.empty())
        throw std::invalid_argument("iou: labelings must share dimensions");
    LabelIoU r;
    r.label = label;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        bool in_pred = pred[i] == label;
        bool in_gt = gt[i] == label;
        r.intersection += in_pred && in_gt;
        r.set_union += in_pred || in_gt;
    }
    r.iou = r.set_union == 0
                ? 1.0  // absent from both masks
                : static_cast<double>(r.intersection) / static_cast<double>(r.set_union);
    return r;
}

}  // namespace

double iou(const ImageI32& pred, const ImageI32& gt, int label) {
    return count_label(pred, gt, label).iou;
}

double miou(const ImageI32& pred, const ImageI32& gt, const std::vector<int>& labels) {
    if (labels.empty())
        throw std::invalid_argument("miou: label set must be nonempty");
    double sum = 0.0;
    for (int l : labels) sum += iou(pred, gt, l);
    return sum / static_cast<double>(labels.size());
}

EvalReport evaluate(const ImageI32& pred, const ImageI32& gt,
                    const std::vector<int>& labels,
                    const std::vector<std::string>& names) {
    if (labels.empty())
        throw std::invalid_argument("evaluate: label set must be nonempty");
    EvalReport report;
    double sum = 0.0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        LabelIoU r = count_label(pred, gt, labels[k]);
        if (k < names.size()) r.name = names[k];
        sum += r.iou;
        report.per_label.push_back(std::move(r));
    }
    report.miou = sum / static_cast<double>(labels.size());
    return report;
}

}  // namespace tofhair::metrics
