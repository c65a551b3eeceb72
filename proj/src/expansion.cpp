#include "potb/expansion.hpp"

#include <unordered_map>

namespace potb {

namespace {

long long int_pow(int s, int e) {
    long long p = 1;
    for (int i = 0; i < e; ++i) p *= s;
    return p;
}

// The unique c != 0 with a - c b in W, if any. Requires a, b outside W.
int class_scalar(const Subspace& W, const FieldVector& a, const FieldVector& b) {
    const Field& f = a.field;
    for (int c = 1; c < f.order(); ++c) {
        if (W.contains(add(a, scale(b, f.neg(c))))) return c;
    }
    return 0;
}

bool constant_on_plan(const Plan& plan, const FieldVector& w) {
    int first = -1;
    bool constant = true;
    plan.for_each_run([&](int, const FieldVector& x) {
        int lvl = dot(w, x);
        if (first == -1) first = lvl;
        else if (lvl != first) constant = false;
    });
    return constant;
}

} // namespace

Plan expand(const Plan& plan, const Subspace& V) {
    if (V.field() != plan.field || V.ambient_dim() != plan.m) {
        fail(Errc::DimensionMismatch, "expansion subspace does not match the plan's space");
    }
    if (V.dim() > 8) fail(Errc::TooLarge, "expansion along dim > 8 refused");
    auto shifts = V.members();
    Plan out{plan.field, plan.m, plan.b * static_cast<int>(shifts.size()), plan.k, {}};
    out.blocks.reserve(static_cast<size_t>(out.b));
    for (int j = 0; j < plan.b; ++j) {
        for (const auto& v : shifts) {
            std::vector<FieldVector> block;
            block.reserve(static_cast<size_t>(plan.k));
            for (const auto& x : plan.blocks[static_cast<size_t>(j)]) block.push_back(add(v, x));
            out.blocks.push_back(std::move(block));
        }
    }
    return out;
}

long long slice_count(const Subspace& V, const FieldVector& a, const FieldVector& b,
                      int alpha, int beta) {
    const Field& f = V.field();
    const int t = V.dim();
    Subspace perp = V.orthocomplement();
    const bool a_in = perp.contains(a);
    const bool b_in = perp.contains(b);

    if (a_in && alpha != 0) return 0;
    if (b_in && beta != 0) return 0;
    if (a_in && b_in) return int_pow(f.order(), t);
    if (a_in || b_in) return int_pow(f.order(), t - 1);

    int c = class_scalar(perp, a, b);
    if (c != 0) {
        return alpha == f.mul(c, beta) ? int_pow(f.order(), t - 1) : 0;
    }
    return int_pow(f.order(), t - 2);
}

IntMatrix transform_incidence(const IntMatrix& M, const FieldVector& a,
                              const FieldVector& b, const Subspace& V) {
    const Field& f = V.field();
    const int s = f.order();
    const int t = V.dim();
    Subspace perp = V.orthocomplement();
    const bool a_in = perp.contains(a);
    const bool b_in = perp.contains(b);

    if (a_in && b_in) return M.scaled(int_pow(s, t));

    IntMatrix out(s, s);
    if (a_in) { // rows keep their a-level; columns smear uniformly
        auto rs = M.row_sums();
        long long w = int_pow(s, t - 1);
        for (int p = 0; p < s; ++p) {
            for (int q = 0; q < s; ++q) out(p, q) = w * rs[static_cast<size_t>(p)];
        }
        return out;
    }
    if (b_in) {
        auto cs = M.col_sums();
        long long w = int_pow(s, t - 1);
        for (int p = 0; p < s; ++p) {
            for (int q = 0; q < s; ++q) out(p, q) = w * cs[static_cast<size_t>(q)];
        }
        return out;
    }
    int c = class_scalar(perp, a, b);
    if (c != 0) { // same class: sum along the transversal of slope c
        long long w = int_pow(s, t - 1);
        for (int p = 0; p < s; ++p) {
            for (int q = 0; q < s; ++q) {
                long long acc = 0;
                for (int u = 0; u < s; ++u) acc += M(f.sub(p, f.mul(c, u)), f.sub(q, u));
                out(p, q) = w * acc;
            }
        }
        return out;
    }
    long long total = M.sum() * int_pow(s, t - 2);
    for (auto& e : out.v) e = total;
    return out;
}

IncidenceBundle expanded_incidence(const Plan& plan, const Subspace& V, const Pencil& a,
                                   const Pencil& b) {
    IncidenceBundle base = incidence_bundle(plan, a, b);
    const Field& f = plan.field;
    const int s = f.order();
    const int t = V.dim();
    Subspace perp = V.orthocomplement();

    IncidenceBundle out{a, b, {}, {}, {}, {}, {}};
    out.n_ab = transform_incidence(base.n_ab, a.a, b.a, V);

    auto transform_repl = [&](const std::vector<long long>& r, const FieldVector& coeff) {
        std::vector<long long> rt(static_cast<size_t>(s), 0);
        if (perp.contains(coeff)) {
            long long w = int_pow(s, t);
            for (int p = 0; p < s; ++p) rt[static_cast<size_t>(p)] = w * r[static_cast<size_t>(p)];
        } else {
            long long total = 0;
            for (auto e : r) total += e;
            long long w = int_pow(s, t - 1);
            for (int p = 0; p < s; ++p) rt[static_cast<size_t>(p)] = w * total;
        }
        return rt;
    };
    out.r_a = transform_repl(base.r_a, a.a);
    out.r_b = transform_repl(base.r_b, b.a);

    // Block incidence: column (j, v) of the expansion is column j of the base
    // shifted by the coefficient level of v.
    auto shifts = V.members();
    auto transform_block = [&](const IntMatrix& l, const FieldVector& coeff) {
        IntMatrix lt(s, plan.b * static_cast<int>(shifts.size()));
        for (int j = 0; j < plan.b; ++j) {
            for (size_t vi = 0; vi < shifts.size(); ++vi) {
                int shift = dot(coeff, shifts[vi]);
                int col = j * static_cast<int>(shifts.size()) + static_cast<int>(vi);
                for (int p = 0; p < s; ++p) lt(p, col) = l(f.sub(p, shift), j);
            }
        }
        return lt;
    };
    out.l_a = transform_block(base.l_a, a.a);
    out.l_b = transform_block(base.l_b, b.a);
    return out;
}

int EffectClassPartition::class_of(const Pencil& p) const {
    for (size_t c = 0; c < classes.size(); ++c) {
        for (const auto& q : classes[c]) {
            if (q == p) return static_cast<int>(c);
        }
    }
    return -1;
}

EffectClassPartition effect_classes(const Subspace& V) {
    const Field& f = V.field();
    const int m = V.ambient_dim();
    Subspace perp = V.orthocomplement();

    EffectClassPartition out{V, {}};
    std::unordered_map<std::string, int> key_to_class;
    for (const Pencil& p : all_pencils(m, f)) {
        std::vector<FieldVector> gens = perp.basis();
        gens.push_back(p.a);
        std::string key = Subspace::span(f, m, gens).to_string();
        auto it = key_to_class.find(key);
        if (it == key_to_class.end()) {
            key_to_class.emplace(key, static_cast<int>(out.classes.size()));
            out.classes.push_back({p});
        } else {
            out.classes[static_cast<size_t>(it->second)].push_back(p);
        }
    }
    return out;
}

bool same_effect_class(const Subspace& Vperp, const FieldVector& a, const FieldVector& b) {
    const Field& f = Vperp.field();
    const int m = Vperp.ambient_dim();
    std::vector<FieldVector> ga = Vperp.basis();
    ga.push_back(a);
    std::vector<FieldVector> gb = Vperp.basis();
    gb.push_back(b);
    return Subspace::span(f, m, ga) == Subspace::span(f, m, gb);
}

const char* prediction_name(Prediction p) {
    switch (p) {
    case Prediction::Otb: return "OTB";
    case Prediction::SameAsBase: return "SameAsBase";
    case Prediction::NotAliased: return "NotAliased";
    case Prediction::NoClaim: return "NoClaim";
    }
    return "?";
}

Prediction predict_relation(const Plan& plan, const Subspace& V, const Pencil& a,
                            const Pencil& b) {
    const Field& f = plan.field;
    Subspace perp = V.orthocomplement();
    if (!same_effect_class(perp, a.a, b.a)) return Prediction::Otb;
    const bool a_in = perp.contains(a.a);
    const bool b_in = perp.contains(b.a);
    if (a_in && b_in) return Prediction::SameAsBase;
    if (!a_in && !b_in && V.dim() >= 1 && aliased_check(plan, a, b)) {
        int c = class_scalar(perp, a.a, b.a);
        FieldVector word = add(a.a, scale(b.a, f.neg(c)));
        if (!constant_on_plan(plan, word)) return Prediction::NotAliased;
    }
    return Prediction::NoClaim;
}

} // namespace potb
