#pragma once

#include <string>
#include <vector>

#include "potb/gf.hpp"

namespace potb {

/// A factorial effect, held as the canonical representative of its pencil:
/// nonzero coefficient vector with first nonzero coordinate equal to 1.
struct Pencil {
    FieldVector a;

    int dim() const { return a.dim(); }
    bool operator==(const Pencil& o) const { return a == o.a; }
    bool operator!=(const Pencil& o) const { return !(*this == o); }
    bool operator<(const Pencil& o) const { return a < o.a; }
};

Pencil pencil_canonical(const FieldVector& a); // throws ZeroVector

/// Parses names like "A", "BD^2", "AB^2D". Letters map to factor positions,
/// must be strictly increasing; exponents range over 1..s-1.
Pencil effect_parse(const std::string& name, int m, const Field& f);

std::string effect_print(const Pencil& p);

/// Level of a run under the effect: a'x in F_s.
int level_of(const Pencil& p, const FieldVector& run);

/// An ordered set of distinct canonical pencils.
struct EffectModel {
    int m = 0;
    Field field;
    std::vector<Pencil> pencils;

    int size() const { return static_cast<int>(pencils.size()); }
    const Pencil& operator[](int i) const { return pencils[static_cast<size_t>(i)]; }
    int index_of(const Pencil& p) const; // -1 if absent
};

/// All main effects, in factor order.
EffectModel model_mains(int m, const Field& f);

/// Mains followed by all two-factor interaction pencils, graded
/// lexicographic: for i < j the pencils A_i A_j, A_i A_j^2, ..., A_i A_j^(s-1).
EffectModel model_mains_and_2fi(int m, const Field& f);

/// Every canonical pencil of F_s^m in a fixed lexicographic order.
std::vector<Pencil> all_pencils(int m, const Field& f);

} // namespace potb
