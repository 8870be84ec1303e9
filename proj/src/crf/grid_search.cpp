#include "tofhair/crf/grid_search.hpp"

#include <stdexcept>

#include "tofhair/core/parallel.hpp"
#include "tofhair/metrics/iou.hpp"

namespace tofhair::crf {

GridSearchResult grid_search_params(const std::vector<CrfInstance>& instances,
                                    const ParamGrid& grid,
                                    const std::string& target_label,
                                    int iterations, int jobs) {
    if (instances.empty())
        throw std::invalid_argument("grid_search_params: no instances");
    if (grid.w1.empty() || grid.theta_alpha.empty() || grid.theta_beta.empty() ||
        grid.theta_gamma.empty())
        throw std::invalid_argument("grid_search_params: empty grid dimension");
    for (const auto& inst : instances)
        if (inst.unary.label_index(target_label) < 0)
            throw std::invalid_argument("grid_search_params: instance lacks label '" +
                                        target_label + "'");

    std::vector<CrfParams> points;
    for (double w1 : grid.w1)
        for (double ta : grid.theta_alpha)
            for (double tb : grid.theta_beta)
                for (double tg : grid.theta_gamma) {
                    CrfParams p;
                    p.w1 = w1;
                    p.w2 = grid.w2;
                    p.theta_alpha = ta;
                    p.theta_beta = tb;
                    p.theta_gamma = tg;
                    p.theta_delta = grid.theta_delta;
                    p.validate();
                    points.push_back(p);
                }

    GridSearchResult result;
    result.table.resize(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t k) {
        const CrfParams& p = points[k];
        double sum = 0.0;
        for (const auto& inst : instances) {
            Marginals q = mean_field_infer(inst.unary, inst.feats, p, iterations, 1);
            Labeling decoded = map_labeling(q);
            int target = inst.unary.label_index(target_label);
            sum += metrics::iou(decoded.ids, inst.ground_truth.ids, target);
        }
        result.table[k] = {p, sum / static_cast<double>(instances.size())};
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < result.table.size(); ++k)
        if (result.table[k].mean_iou > result.table[best].mean_iou) best = k;
    result.best = result.table[best].params;
    result.best_score = result.table[best].mean_iou;
    return result;
}

}  // namespace tofhair::crf
