#include "potb/incidence.hpp"

namespace potb {

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols, rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix out(rows, o.cols);
    for (int r = 0; r < rows; ++r) {
        for (int i = 0; i < cols; ++i) {
            long long x = (*this)(r, i);
            if (x == 0) continue;
            for (int c = 0; c < o.cols; ++c) out(r, c) += x * o(i, c);
        }
    }
    return out;
}

IntMatrix IntMatrix::scaled(long long f) const {
    IntMatrix out = *this;
    for (auto& e : out.v) e *= f;
    return out;
}

std::vector<long long> IntMatrix::row_sums() const {
    std::vector<long long> out(static_cast<size_t>(rows), 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) out[static_cast<size_t>(r)] += (*this)(r, c);
    }
    return out;
}

std::vector<long long> IntMatrix::col_sums() const {
    std::vector<long long> out(static_cast<size_t>(cols), 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) out[static_cast<size_t>(c)] += (*this)(r, c);
    }
    return out;
}

long long IntMatrix::sum() const {
    long long acc = 0;
    for (auto e : v) acc += e;
    return acc;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (int r = 0; r < rows; ++r) {
        out += (r == 0 ? "[" : ",[");
        for (int c = 0; c < cols; ++c) {
            if (c > 0) out.push_back(',');
            out += std::to_string((*this)(r, c));
        }
        out.push_back(']');
    }
    out.push_back(']');
    return out;
}

namespace {

void require_dims(const Plan& plan, const Pencil& p) {
    if (p.a.field != plan.field || p.dim() != plan.m) {
        fail(Errc::DimensionMismatch, "pencil does not match the plan's space");
    }
}

} // namespace

std::vector<long long> replication_vector(const Plan& plan, const Pencil& a) {
    require_dims(plan, a);
    std::vector<long long> r(static_cast<size_t>(plan.field.order()), 0);
    plan.for_each_run([&](int, const FieldVector& x) { r[static_cast<size_t>(level_of(a, x))]++; });
    return r;
}

IntMatrix incidence_matrix(const Plan& plan, const Pencil& a, const Pencil& b) {
    require_dims(plan, a);
    require_dims(plan, b);
    const int s = plan.field.order();
    IntMatrix n(s, s);
    plan.for_each_run(
        [&](int, const FieldVector& x) { n(level_of(a, x), level_of(b, x))++; });
    return n;
}

IntMatrix effect_block_matrix(const Plan& plan, const Pencil& a) {
    require_dims(plan, a);
    IntMatrix l(plan.field.order(), plan.b);
    plan.for_each_run([&](int j, const FieldVector& x) { l(level_of(a, x), j)++; });
    return l;
}

IncidenceBundle incidence_bundle(const Plan& plan, const Pencil& a, const Pencil& b) {
    return IncidenceBundle{a,
                           b,
                           replication_vector(plan, a),
                           replication_vector(plan, b),
                           incidence_matrix(plan, a, b),
                           effect_block_matrix(plan, a),
                           effect_block_matrix(plan, b)};
}

} // namespace potb
