#pragma once

#include <string>
#include <vector>

#include "potb/effects.hpp"
#include "potb/plan.hpp"
#include "potb/ratmat.hpp"

namespace potb {

/// Full-rank-free indicator design matrix. Column order: general mean, block
/// indicators (optional), then one group of s level-indicator columns per
/// model pencil in model order.
struct ModelMatrix {
    EffectModel model;
    bool with_blocks = false;
    int n = 0;       // runs
    int nblocks = 0; // block columns (0 if with_blocks is false)
    RatMatrix X;
    int mean_col = 0;
    int block_col0 = -1;
    std::vector<int> pencil_col0; // first column of each pencil's group

    int s() const { return model.field.order(); }
    std::vector<int> mean_cols() const { return {mean_col}; }
    std::vector<int> block_cols() const;
    std::vector<int> pencil_cols(int i) const;
};

ModelMatrix design_matrix(const Plan& plan, const EffectModel& model, bool with_blocks);

/// A set of column groups of a ModelMatrix, for sums-of-squares adjustment.
struct GroupSel {
    bool mean = false;
    bool blocks = false;
    std::vector<int> pencils; // indices into the model

    static GroupSel of_mean() { return {true, false, {}}; }
    static GroupSel of_blocks() { return {false, true, {}}; }
};

RatMatrix group_columns(const ModelMatrix& mm, const GroupSel& sel);

/// SS_{S;T}: the sum of squares for the groups S adjusted for the groups T,
/// as the exact quadratic form y' P y with P the projector onto (I - P_T) X_S.
Rat adjusted_ss(const std::vector<Rat>& y, const ModelMatrix& mm, const GroupSel& S,
                const GroupSel& T);

/// Sequential variant: pencil i adjusted for every later pencil group plus
/// blocks and mean.
Rat sequential_ss(const std::vector<Rat>& y, const ModelMatrix& mm, int pencil_index);

/// The two exact equivalences of adjusted inference:
///  - ss_equal_a: the fully adjusted SS of pencil i equals its unadjusted SS
///    (as quadratic forms) iff i has proportional frequencies with every
///    other model effect and with the block factor (pfc_all).
///  - ss_equal_b: the fully adjusted SS equals the blocks-only-adjusted SS
///    iff i is orthogonal through the block factor to every other model
///    effect (otb_all).
struct CondOrthCheck {
    bool ss_equal_a = false;
    bool pfc_all = false;
    bool ss_equal_b = false;
    bool otb_all = false;
};

CondOrthCheck check_thm_cond_orth(const Plan& plan, const EffectModel& model,
                                  int pencil_index);

enum class Estimability { Estimable, PartiallyEstimable, NotEstimable };

const char* estimability_name(Estimability e);

struct EstimabilityRow {
    Pencil pencil;
    Estimability verdict;
    int df = 0; // estimable contrast dimensions, 0..s-1
};

struct EstimabilityReport {
    std::vector<EstimabilityRow> rows;
    int estimable = 0;
    int partial = 0;
    int lost = 0;
    int df_total = 0;

    std::string to_tsv() const;
};

/// Per-pencil estimability in the full model with blocks: a contrast is
/// estimable iff it lies in the row space of X, decided by exact rank.
EstimabilityReport estimable_pencils(const Plan& plan, const EffectModel& model);

} // namespace potb
