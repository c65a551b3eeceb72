#include "potb/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace potb {

const char* block_relation_name(BlockRelation r) {
    switch (r) {
    case BlockRelation::ConstantOnPlan: return "ConstantOnPlan";
    case BlockRelation::ConfoundedWithBlock: return "ConfoundedWithBlock";
    case BlockRelation::VariesWithinBlocks: return "VariesWithinBlocks";
    }
    return "?";
}

namespace {

bool aliased_pattern(const IntMatrix& n) {
    bool any = false;
    for (int p = 0; p < n.rows; ++p) {
        int nz = 0;
        for (int q = 0; q < n.cols; ++q) {
            if (n(p, q) != 0) ++nz;
        }
        if (nz > 1) return false;
        if (nz == 1) any = true;
    }
    for (int q = 0; q < n.cols; ++q) {
        int nz = 0;
        for (int p = 0; p < n.rows; ++p) {
            if (n(p, q) != 0) ++nz;
        }
        if (nz > 1) return false;
    }
    return any;
}

bool constant_replication(const std::vector<long long>& r, long long n) {
    for (long long e : r) {
        if (e == n) return true;
    }
    return false;
}

} // namespace

bool otb_check(const Plan& plan, const Pencil& a, const Pencil& b) {
    IntMatrix n = incidence_matrix(plan, a, b);
    IntMatrix la = effect_block_matrix(plan, a);
    IntMatrix lb = effect_block_matrix(plan, b);
    return n.scaled(plan.k) == la * lb.transpose();
}

bool pfc_check(const Plan& plan, const Pencil& a, const Pencil& b) {
    IntMatrix n = incidence_matrix(plan, a, b);
    auto ra = replication_vector(plan, a);
    auto rb = replication_vector(plan, b);
    const long long total = plan.runs();
    const int s = plan.field.order();
    for (int p = 0; p < s; ++p) {
        for (int q = 0; q < s; ++q) {
            if (total * n(p, q) != ra[static_cast<size_t>(p)] * rb[static_cast<size_t>(q)]) {
                return false;
            }
        }
    }
    return true;
}

bool pfc_block_check(const Plan& plan, const Pencil& a) {
    IntMatrix l = effect_block_matrix(plan, a);
    auto r = replication_vector(plan, a);
    const long long total = plan.runs();
    for (int p = 0; p < l.rows; ++p) {
        for (int j = 0; j < l.cols; ++j) {
            if (total * l(p, j) != r[static_cast<size_t>(p)] * plan.k) return false;
        }
    }
    return true;
}

bool aliased_check(const Plan& plan, const Pencil& a, const Pencil& b) {
    return aliased_pattern(incidence_matrix(plan, a, b));
}

BlockRelation block_relation(const Plan& plan, const Pencil& a) {
    IntMatrix l = effect_block_matrix(plan, a);
    // Level of each block, or -1 if the block meets several levels.
    int first_level = -1;
    bool across_differ = false;
    for (int j = 0; j < l.cols; ++j) {
        int level = -1;
        for (int p = 0; p < l.rows; ++p) {
            if (l(p, j) == 0) continue;
            if (level != -1) return BlockRelation::VariesWithinBlocks;
            level = p;
        }
        if (first_level == -1) first_level = level;
        else if (level != first_level) across_differ = true;
    }
    return across_differ ? BlockRelation::ConfoundedWithBlock : BlockRelation::ConstantOnPlan;
}

std::string PairRelation::flags_string() const {
    std::string out;
    auto append = [&](const char* f) {
        if (!out.empty()) out.push_back(',');
        out += f;
    };
    if (aliased) append("Aliased");
    if (otb) append("OTB");
    if (pfc_applicable && pfc) append("PFC");
    if (nonorthogonal) append("NonOrthogonal");
    return out;
}

PairRelation pair_relation(const Plan& plan, const Pencil& a, const Pencil& b) {
    IncidenceBundle ev = incidence_bundle(plan, a, b);
    const long long n = plan.runs();

    PairRelation rel;
    rel.aliased = aliased_pattern(ev.n_ab);
    rel.otb = ev.n_ab.scaled(plan.k) == ev.l_a * ev.l_b.transpose();
    rel.pfc_applicable =
        !constant_replication(ev.r_a, n) && !constant_replication(ev.r_b, n);
    rel.pfc = true;
    for (int p = 0; p < ev.n_ab.rows && rel.pfc; ++p) {
        for (int q = 0; q < ev.n_ab.cols; ++q) {
            if (n * ev.n_ab(p, q) !=
                ev.r_a[static_cast<size_t>(p)] * ev.r_b[static_cast<size_t>(q)]) {
                rel.pfc = false;
                break;
            }
        }
    }
    rel.nonorthogonal = !rel.otb && !rel.aliased;
    rel.n_ab = std::move(ev.n_ab);
    rel.l_a = std::move(ev.l_a);
    rel.l_b = std::move(ev.l_b);
    return rel;
}

AliasClasses alias_classes(const Plan& plan, const EffectModel& model) {
    AliasClasses out;
    const int n = model.size();
    std::vector<BlockRelation> rel(static_cast<size_t>(n));
    std::vector<int> live; // indices taking part in the closure
    for (int i = 0; i < n; ++i) {
        rel[static_cast<size_t>(i)] = block_relation(plan, model[i]);
        switch (rel[static_cast<size_t>(i)]) {
        case BlockRelation::ConstantOnPlan: out.constant_on_plan.push_back(model[i]); break;
        case BlockRelation::ConfoundedWithBlock:
            out.confounded_with_block.push_back(model[i]);
            break;
        case BlockRelation::VariesWithinBlocks: live.push_back(i); break;
        }
    }

    // Union-find over the live effects.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (size_t ii = 0; ii < live.size(); ++ii) {
        for (size_t jj = ii + 1; jj < live.size(); ++jj) {
            int i = live[ii], j = live[jj];
            if (aliased_check(plan, model[i], model[j])) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
            }
        }
    }
    // Emit classes ordered by smallest member index; members in model order.
    for (int i : live) {
        if (find(i) != i) continue;
        std::vector<Pencil> cls;
        for (int j : live) {
            if (find(j) == i) cls.push_back(model[j]);
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

const PairRelation& RelationMatrix::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    // Index of (i,j), i<j, in the flattened upper triangle.
    const int n = model.size();
    int idx = i * n - i * (i + 1) / 2 + (j - i - 1);
    return pairs[static_cast<size_t>(idx)];
}

std::string RelationMatrix::to_tsv() const {
    std::string out = "# pair-relations\n";
    const int n = model.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out += effect_print(model[i]) + "\t" + effect_print(model[j]) + "\t" +
                   at(i, j).flags_string() + "\n";
        }
    }
    out += "# block-relations\n";
    for (int i = 0; i < n; ++i) {
        out += effect_print(model[i]) + "\t" +
               block_relation_name(block[static_cast<size_t>(i)]) + "\n";
    }
    return out;
}

RelationMatrix relation_matrix(const Plan& plan, const EffectModel& model) {
    RelationMatrix rm{model, {}, {}};
    const int n = model.size();
    rm.pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rm.pairs.push_back(pair_relation(plan, model[i], model[j]));
        }
    }
    rm.block.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rm.block.push_back(block_relation(plan, model[i]));
    return rm;
}

PartitionReport verify_partition(const Plan& plan,
                                 const std::vector<std::vector<Pencil>>& partition) {
    PartitionReport report;
    for (size_t ci = 0; ci < partition.size(); ++ci) {
        for (size_t cj = ci + 1; cj < partition.size(); ++cj) {
            for (const auto& a : partition[ci]) {
                for (const auto& b : partition[cj]) {
                    if (!otb_check(plan, a, b)) {
                        report.violations.push_back(
                            {a, b, static_cast<int>(ci), static_cast<int>(cj)});
                    }
                }
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

} // namespace potb
