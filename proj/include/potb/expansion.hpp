#pragma once

#include <vector>

#include "potb/incidence.hpp"
#include "potb/relations.hpp"

namespace potb {

/// The expansion of a plan along a subspace V: one block v + B_j for every
/// base block B_j and every v in V. Blocks are ordered (j, v) with j outer
/// and v in members(V) order, so output is reproducible bit for bit.
Plan expand(const Plan& plan, const Subspace& V); // throws TooLarge if dim(V) > 8

/// |{v in V : a'v = alpha, b'v = beta}| by closed-form case analysis on the
/// positions of a and b relative to the orthocomplement of V.
long long slice_count(const Subspace& V, const FieldVector& a, const FieldVector& b,
                      int alpha, int beta);

/// The shifted-sum transform M~(alpha,beta) = sum_{v in V} M(alpha-a'v, beta-b'v),
/// evaluated through its five structured cases rather than the double sum.
IntMatrix transform_incidence(const IntMatrix& M, const FieldVector& a,
                              const FieldVector& b, const Subspace& V);

/// Incidence data of expand(plan, V) computed from the base plan's data
/// alone, without building the expanded plan.
IncidenceBundle expanded_incidence(const Plan& plan, const Subspace& V, const Pencil& a,
                                   const Pencil& b);

/// Effects classes relative to V: pencils a, b are equivalent when
/// <a> + Vperp = <b> + Vperp. Pencils inside Vperp form one class.
struct EffectClassPartition {
    Subspace V;
    std::vector<std::vector<Pencil>> classes;

    int class_of(const Pencil& p) const; // -1 if not found
};

EffectClassPartition effect_classes(const Subspace& V);

bool same_effect_class(const Subspace& Vperp, const FieldVector& a, const FieldVector& b);

/// What expansion along V does to the relation of a pair of effects.
enum class Prediction { Otb, SameAsBase, NotAliased, NoClaim };

const char* prediction_name(Prediction p);

/// Predicts the pair's relation in expand(plan, V):
///  - different effects classes            -> Otb
///  - both coefficient vectors in Vperp    -> SameAsBase
///  - same class, neither in Vperp, pair aliased in the base plan, and the
///    class word a - c b not constant on the plan -> NotAliased
///  - anything else                        -> NoClaim
/// The constant-word guard matters: if a - c b is a defining word of the
/// base plan lying in Vperp, the pair stays aliased after expansion.
Prediction predict_relation(const Plan& plan, const Subspace& V, const Pencil& a,
                            const Pencil& b);

} // namespace potb
