#pragma once

#include <vector>

#include "potb/expansion.hpp"
#include "potb/linmodel.hpp"

namespace potb {

/// Quality of one candidate expansion subspace, judged by the estimability
/// of the model in the expanded plan.
struct SubspaceScore {
    Subspace V;
    int n_blocks = 0;
    int n_estimable = 0;
    int n_partial = 0;
    int n_not_estimable = 0;
    int n_confounded_block = 0; // model effects confounded with blocks after expansion
    int n_constant = 0;         // model effects constant on the expanded plan
    std::vector<int> class_sizes; // model effects per effects class relative to V
};

SubspaceScore score_subspace(const Plan& plan, const Subspace& V, const EffectModel& model);

/// Scores every t-dimensional subspace and returns the best `limit`, ordered
/// by (estimable desc, confounded asc, canonical basis asc).
std::vector<SubspaceScore> search_best(const Plan& plan, int t, const EffectModel& model,
                                       int limit);

} // namespace potb
