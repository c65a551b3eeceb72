#include "potb/search.hpp"

#include <algorithm>
#include <map>

namespace potb {

SubspaceScore score_subspace(const Plan& plan, const Subspace& V, const EffectModel& model) {
    Plan big = expand(plan, V);
    SubspaceScore score{V, big.b, 0, 0, 0, 0, 0, {}};

    EstimabilityReport est = estimable_pencils(big, model);
    score.n_estimable = est.estimable;
    score.n_partial = est.partial;
    score.n_not_estimable = est.lost;

    for (int i = 0; i < model.size(); ++i) {
        switch (block_relation(big, model[i])) {
        case BlockRelation::ConfoundedWithBlock: score.n_confounded_block++; break;
        case BlockRelation::ConstantOnPlan: score.n_constant++; break;
        case BlockRelation::VariesWithinBlocks: break;
        }
    }

    // Model effects per class relative to V, in class discovery order.
    EffectClassPartition classes = effect_classes(V);
    std::map<int, int> counts;
    for (int i = 0; i < model.size(); ++i) counts[classes.class_of(model[i])]++;
    for (const auto& [cls, count] : counts) {
        (void)cls;
        score.class_sizes.push_back(count);
    }
    return score;
}

std::vector<SubspaceScore> search_best(const Plan& plan, int t, const EffectModel& model,
                                       int limit) {
    if (t < 0 || t > plan.m) fail(Errc::DimensionMismatch, "subspace dimension out of range");
    long long count = gaussian_binomial(plan.m, t, plan.field.order());
    if (count > 1000000) {
        fail(Errc::TooLarge, std::to_string(count) + " candidate subspaces; refusing");
    }

    std::vector<SubspaceScore> scores;
    scores.reserve(static_cast<size_t>(count));
    for_each_subspace(plan.field, plan.m, t,
                      [&](const Subspace& v) { scores.push_back(score_subspace(plan, v, model)); });

    std::stable_sort(scores.begin(), scores.end(),
                     [](const SubspaceScore& x, const SubspaceScore& y) {
                         if (x.n_estimable != y.n_estimable) return x.n_estimable > y.n_estimable;
                         if (x.n_confounded_block != y.n_confounded_block) {
                             return x.n_confounded_block < y.n_confounded_block;
                         }
                         return x.V.compare(y.V) < 0;
                     });
    if (limit >= 0 && static_cast<int>(scores.size()) > limit) {
        scores.erase(scores.begin() + limit, scores.end());
    }
    return scores;
}

} // namespace potb
