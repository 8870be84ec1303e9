#pragma once

#include <string>
#include <vector>

#include "tofhair/crf/mean_field.hpp"
#include "tofhair/crf/unary.hpp"

namespace tofhair::crf {

/// One refinement problem with ground truth for scoring.
struct CrfInstance {
    UnaryField unary;
    FeatureField feats;
    Labeling ground_truth;
};

/// Candidate values for the searched parameters. w2 and theta_delta are held
/// fixed during the search.
struct ParamGrid {
    std::vector<double> w1;
    std::vector<double> theta_alpha;
    std::vector<double> theta_beta;
    std::vector<double> theta_gamma;
    double w2 = 1.0;
    double theta_delta = 1.0;
};

struct GridPointScore {
    CrfParams params;
    double mean_iou = 0.0;
};

struct GridSearchResult {
    CrfParams best;
    double best_score = 0.0;
    std::vector<GridPointScore> table;  // lexicographic grid order
};

/// Exhaustive search scoring each combination by the mean IoU of the target
/// class (by label name, e.g. "hair") of the decoded refinement against
/// ground truth. Ties keep the earliest grid point; deterministic for any
/// job count.
GridSearchResult grid_search_params(const std::vector<CrfInstance>& instances,
                                    const ParamGrid& grid,
                                    const std::string& target_label = "hair",
                                    int iterations = kDefaultMeanFieldIterations,
                                    int jobs = 1);

}  // namespace tofhair::crf
