#pragma once

#include <string>
#include <vector>

#include "potb/effects.hpp"
#include "potb/plan.hpp"

namespace potb {

/// Small dense integer matrix for incidence counts.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> v;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0) {}

    long long& operator()(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
    long long operator()(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix scaled(long long f) const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::vector<long long> row_sums() const;
    std::vector<long long> col_sums() const;
    long long sum() const;

    std::string to_string() const; // row-major bracketed integers
};

/// r^a: per-level run counts of the effect, with multiplicity.
std::vector<long long> replication_vector(const Plan& plan, const Pencil& a);

/// N^{ab}: s x s matrix of joint level counts, rows indexed by a-levels.
IntMatrix incidence_matrix(const Plan& plan, const Pencil& a, const Pencil& b);

/// L^a: s x b matrix of per-block level counts.
IntMatrix effect_block_matrix(const Plan& plan, const Pencil& a);

struct IncidenceBundle {
    Pencil a, b;
    std::vector<long long> r_a, r_b;
    IntMatrix n_ab; // s x s
    IntMatrix l_a;  // s x b
    IntMatrix l_b;  // s x b
};

IncidenceBundle incidence_bundle(const Plan& plan, const Pencil& a, const Pencil& b);

} // namespace potb
