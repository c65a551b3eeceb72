#pragma once

#include <string>
#include <vector>

#include "potb/incidence.hpp"

namespace potb {

/// How an effect sits relative to the blocking:
///  - ConstantOnPlan: one level carries every run (a defining word).
///  - ConfoundedWithBlock: constant within each block, varying across blocks.
///  - VariesWithinBlocks: some block meets two or more levels.
enum class BlockRelation { ConstantOnPlan, ConfoundedWithBlock, VariesWithinBlocks };

const char* block_relation_name(BlockRelation r);

/// Orthogonality through the block factor: k N^{ab} = L^a (L^b)'.
bool otb_check(const Plan& plan, const Pencil& a, const Pencil& b);

/// Addelman's proportional frequency condition: n N^{ab} = r^a (r^b)'.
bool pfc_check(const Plan& plan, const Pencil& a, const Pencil& b);

/// Proportional frequencies against the block factor: n L^a = k r^a 1'.
bool pfc_block_check(const Plan& plan, const Pencil& a);

/// Aliasing read off the incidence matrix: N^{ab} nonzero, with at most one
/// nonzero entry per row and per column (levels determine each other).
bool aliased_check(const Plan& plan, const Pencil& a, const Pencil& b);

BlockRelation block_relation(const Plan& plan, const Pencil& a);

struct PairRelation {
    bool aliased = false;
    bool otb = false;
    bool pfc = false;            // meaningful only if pfc_applicable
    bool pfc_applicable = false; // false when either effect is constant on the plan
    bool nonorthogonal = false;  // holds iff neither otb nor aliased
    IntMatrix n_ab, l_a, l_b;    // the incidence evidence the flags came from

    std::string flags_string() const;
};

PairRelation pair_relation(const Plan& plan, const Pencil& a, const Pencil& b);

/// The alias-class partition of a model. Effects constant on the plan or
/// confounded with blocks are listed apart; the remaining effects are
/// partitioned by the transitive closure of pairwise aliasing.
struct AliasClasses {
    std::vector<std::vector<Pencil>> classes;
    std::vector<Pencil> constant_on_plan;
    std::vector<Pencil> confounded_with_block;
};

AliasClasses alias_classes(const Plan& plan, const EffectModel& model);

struct RelationMatrix {
    EffectModel model;
    std::vector<PairRelation> pairs; // flattened upper triangle, (i,j) with i<j
    std::vector<BlockRelation> block;

    const PairRelation& at(int i, int j) const;
    std::string to_tsv() const;
};

RelationMatrix relation_matrix(const Plan& plan, const EffectModel& model);

struct PartitionViolation {
    Pencil a, b;
    int class_a = 0, class_b = 0;
};

struct PartitionReport {
    bool pass = false;
    std::vector<PartitionViolation> violations;
};

/// Checks inter-class orthogonality: every pair from different classes OTB.
PartitionReport verify_partition(const Plan& plan,
                                 const std::vector<std::vector<Pencil>>& partition);

} // namespace potb
