#pragma once

#include <random>

#include "potb/plan.hpp"

namespace potb::testutil {

/// Random plan with the given bounds; runs drawn uniformly, so effects are
/// generally unbalanced and non-orthogonal.
inline Plan random_plan(std::mt19937& rng, int s, int max_m, int max_b, int max_k) {
    Field f(s);
    int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_b));
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_k));
    Plan p{f, m, b, k, {}};
    for (int j = 0; j < b; ++j) {
        std::vector<FieldVector> block;
        for (int r = 0; r < k; ++r) {
            FieldVector x = FieldVector::zero(f, m);
            for (auto& c : x.coords) c = static_cast<int>(rng() % static_cast<unsigned>(s));
            block.push_back(std::move(x));
        }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

inline FieldVector random_vector(std::mt19937& rng, const Field& f, int m) {
    FieldVector x = FieldVector::zero(f, m);
    for (auto& c : x.coords) c = static_cast<int>(rng() % static_cast<unsigned>(f.order()));
    return x;
}

inline FieldVector random_nonzero_vector(std::mt19937& rng, const Field& f, int m) {
    while (true) {
        FieldVector x = random_vector(rng, f, m);
        if (!x.is_zero()) return x;
    }
}

inline Subspace random_subspace(std::mt19937& rng, const Field& f, int m, int t) {
    while (true) {
        std::vector<FieldVector> gens;
        for (int i = 0; i < t; ++i) gens.push_back(random_vector(rng, f, m));
        Subspace v = Subspace::span(f, m, gens);
        if (v.dim() == t) return v;
    }
}

} // namespace potb::testutil
