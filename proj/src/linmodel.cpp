#include "potb/linmodel.hpp"

#include <numeric>

#include "potb/relations.hpp"

namespace potb {

std::vector<int> ModelMatrix::block_cols() const {
    std::vector<int> out;
    for (int j = 0; j < nblocks; ++j) out.push_back(block_col0 + j);
    return out;
}

std::vector<int> ModelMatrix::pencil_cols(int i) const {
    std::vector<int> out;
    for (int l = 0; l < s(); ++l) out.push_back(pencil_col0[static_cast<size_t>(i)] + l);
    return out;
}

ModelMatrix design_matrix(const Plan& plan, const EffectModel& model, bool with_blocks) {
    const int s = plan.field.order();
    const int n = plan.runs();
    ModelMatrix mm{model, with_blocks, n, with_blocks ? plan.b : 0, {}, 0, -1, {}};

    int p = 1 + mm.nblocks + s * model.size();
    mm.X = RatMatrix(n, p);
    mm.block_col0 = with_blocks ? 1 : -1;
    int next = 1 + mm.nblocks;
    for (int i = 0; i < model.size(); ++i) {
        mm.pencil_col0.push_back(next);
        next += s;
    }

    int u = 0;
    plan.for_each_run([&](int j, const FieldVector& x) {
        mm.X(u, mm.mean_col) = 1;
        if (with_blocks) mm.X(u, mm.block_col0 + j) = 1;
        for (int i = 0; i < model.size(); ++i) {
            mm.X(u, mm.pencil_col0[static_cast<size_t>(i)] + level_of(model[i], x)) = 1;
        }
        ++u;
    });
    return mm;
}

RatMatrix group_columns(const ModelMatrix& mm, const GroupSel& sel) {
    std::vector<int> cols;
    if (sel.mean) cols.push_back(mm.mean_col);
    if (sel.blocks) {
        for (int c : mm.block_cols()) cols.push_back(c);
    }
    for (int i : sel.pencils) {
        for (int c : mm.pencil_cols(i)) cols.push_back(c);
    }
    return mm.X.columns(cols);
}

namespace {

RatMatrix residual_columns(const ModelMatrix& mm, const GroupSel& S, const GroupSel& T) {
    RatMatrix xs = group_columns(mm, S);
    bool t_empty = !T.mean && !T.blocks && T.pencils.empty();
    if (t_empty) return xs;
    RatMatrix pt = projector(group_columns(mm, T));
    return xs - pt * xs;
}

} // namespace

Rat adjusted_ss(const std::vector<Rat>& y, const ModelMatrix& mm, const GroupSel& S,
                const GroupSel& T) {
    if (static_cast<int>(y.size()) != mm.n) {
        fail(Errc::DimensionMismatch, "response length does not match run count");
    }
    RatMatrix v = residual_columns(mm, S, T);
    RatMatrix p = projector(v);
    // y' P y
    Rat acc = 0;
    for (int r = 0; r < mm.n; ++r) {
        Rat row = 0;
        for (int c = 0; c < mm.n; ++c) {
            if (p(r, c) != 0) row += p(r, c) * y[static_cast<size_t>(c)];
        }
        acc += y[static_cast<size_t>(r)] * row;
    }
    return acc;
}

Rat sequential_ss(const std::vector<Rat>& y, const ModelMatrix& mm, int pencil_index) {
    GroupSel S;
    S.pencils = {pencil_index};
    GroupSel T;
    T.mean = true;
    T.blocks = mm.with_blocks;
    for (int j = pencil_index + 1; j < mm.model.size(); ++j) T.pencils.push_back(j);
    return adjusted_ss(y, mm, S, T);
}

CondOrthCheck check_thm_cond_orth(const Plan& plan, const EffectModel& model,
                                  int pencil_index) {
    ModelMatrix mm = design_matrix(plan, model, /*with_blocks=*/true);
    const int i = pencil_index;

    GroupSel rest;
    rest.mean = true;
    rest.blocks = true;
    for (int j = 0; j < model.size(); ++j) {
        if (j != i) rest.pencils.push_back(j);
    }
    RatMatrix xi = group_columns(mm, GroupSel{false, false, {i}});
    RatMatrix u = xi - projector(group_columns(mm, rest)) * xi;
    RatMatrix v = xi - projector(group_columns(mm, GroupSel::of_mean())) * xi;
    RatMatrix w = xi - projector(group_columns(mm, GroupSel::of_blocks())) * xi;

    CondOrthCheck out;
    out.ss_equal_a = projector(u) == projector(v);
    out.ss_equal_b = projector(u) == projector(w);

    out.pfc_all = pfc_block_check(plan, model[i]);
    out.otb_all = true;
    for (int j = 0; j < model.size(); ++j) {
        if (j == i) continue;
        if (out.pfc_all && !pfc_check(plan, model[i], model[j])) out.pfc_all = false;
        if (out.otb_all && !otb_check(plan, model[i], model[j])) out.otb_all = false;
    }
    return out;
}

const char* estimability_name(Estimability e) {
    switch (e) {
    case Estimability::Estimable: return "Estimable";
    case Estimability::PartiallyEstimable: return "PartiallyEstimable";
    case Estimability::NotEstimable: return "NotEstimable";
    }
    return "?";
}

std::string EstimabilityReport::to_tsv() const {
    std::string out = "# estimability\n";
    for (const auto& row : rows) {
        out += effect_print(row.pencil) + "\t" + estimability_name(row.verdict) + "\t" +
               std::to_string(row.df) + "\n";
    }
    out += "# totals\nestimable=" + std::to_string(estimable) +
           "\tpartial=" + std::to_string(partial) + "\tlost=" + std::to_string(lost) + "\n";
    return out;
}

EstimabilityReport estimable_pencils(const Plan& plan, const EffectModel& model) {
    ModelMatrix mm = design_matrix(plan, model, /*with_blocks=*/true);
    const int s = mm.s();

    // A functional is estimable iff it annihilates the kernel of X. The
    // kernel is computed once; each pencil then costs a tiny rank.
    RatMatrix kern = kernel_basis(mm.X);

    EstimabilityReport report;
    for (int i = 0; i < model.size(); ++i) {
        // Contrast basis on the pencil's levels: e_l - e_{l+1}.
        RatMatrix z(kern.rows(), s - 1);
        int off = mm.pencil_col0[static_cast<size_t>(i)];
        for (int r = 0; r < kern.rows(); ++r) {
            for (int l = 0; l < s - 1; ++l) {
                z(r, l) = kern(r, off + l) - kern(r, off + l + 1);
            }
        }
        int df = (s - 1) - rank(z);
        Estimability verdict = df == s - 1   ? Estimability::Estimable
                               : df == 0     ? Estimability::NotEstimable
                                             : Estimability::PartiallyEstimable;
        report.rows.push_back({model[i], verdict, df});
        report.df_total += df;
        if (verdict == Estimability::Estimable) report.estimable++;
        else if (verdict == Estimability::NotEstimable) report.lost++;
        else report.partial++;
    }
    return report;
}

} // namespace potb
