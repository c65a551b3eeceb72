#include "potb/gf.hpp"

#include <algorithm>

namespace potb {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

Field::Field(int order) : s_(order) {
    if (!is_prime(order)) {
        fail(Errc::NotPrime, "field order " + std::to_string(order) +
                                 " is not prime (prime powers unsupported)");
    }
}

int Field::inv(int a) const {
    if (a % s_ == 0) fail(Errc::ZeroVector, "0 has no multiplicative inverse");
    // Fermat: a^(s-2) mod s.
    long long base = a % s_, acc = 1;
    int e = s_ - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % s_;
        base = base * base % s_;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

bool FieldVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::string FieldVector::digits() const {
    if (field.order() > 10) fail(Errc::TooLarge, "digit form requires field order <= 10");
    std::string out;
    out.reserve(coords.size());
    for (int c : coords) out.push_back(static_cast<char>('0' + c));
    return out;
}

FieldVector FieldVector::from_digits(const Field& f, const std::string& text) {
    if (f.order() > 10) fail(Errc::TooLarge, "digit form requires field order <= 10");
    FieldVector v{f, {}};
    v.coords.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            fail(Errc::SymbolOutOfField, std::string("bad symbol '") + ch + "' in \"" + text + "\"");
        }
        int c = ch - '0';
        if (c >= f.order()) {
            fail(Errc::SymbolOutOfField,
                 "symbol " + std::to_string(c) + " out of field of order " +
                     std::to_string(f.order()));
        }
        v.coords.push_back(c);
    }
    return v;
}

FieldVector FieldVector::zero(const Field& f, int m) {
    return FieldVector{f, std::vector<int>(static_cast<size_t>(m), 0)};
}

FieldVector add(const FieldVector& x, const FieldVector& y) {
    if (x.field != y.field || x.dim() != y.dim()) {
        fail(Errc::DimensionMismatch, "vector addition requires matching field and length");
    }
    FieldVector out = x;
    for (int i = 0; i < x.dim(); ++i) {
        out.coords[static_cast<size_t>(i)] = x.field.add(x[i], y[i]);
    }
    return out;
}

FieldVector scale(const FieldVector& x, int c) {
    FieldVector out = x;
    for (auto& e : out.coords) e = x.field.mul(e, c);
    return out;
}

int dot(const FieldVector& x, const FieldVector& y) {
    if (x.field != y.field || x.dim() != y.dim()) {
        fail(Errc::DimensionMismatch, "dot product requires matching field and length");
    }
    long long acc = 0;
    for (int i = 0; i < x.dim(); ++i) acc += static_cast<long long>(x[i]) * y[i];
    return x.field.reduce(acc);
}

namespace {

// In-place reduced row echelon form over F_s; returns pivot columns.
// Zero rows are removed.
std::vector<int> rref_rows(const Field& f, std::vector<std::vector<int>>& rows, int m) {
    std::vector<int> pivots;
    size_t rank = 0;
    for (int col = 0; col < m && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        int piv = rows[rank][static_cast<size_t>(col)];
        int piv_inv = f.inv(piv);
        for (auto& e : rows[rank]) e = f.mul(e, piv_inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            int factor = rows[r][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j < m; ++j) {
                rows[r][static_cast<size_t>(j)] = f.sub(
                    rows[r][static_cast<size_t>(j)],
                    f.mul(factor, rows[rank][static_cast<size_t>(j)]));
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

} // namespace

Subspace Subspace::zero(const Field& f, int m) { return Subspace(f, m); }

Subspace Subspace::span(const Field& f, int m, const std::vector<FieldVector>& vectors) {
    std::vector<std::vector<int>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.field != f || v.dim() != m) {
            fail(Errc::DimensionMismatch, "span input does not match ambient space");
        }
        rows.push_back(v.coords);
    }
    rref_rows(f, rows, m);
    Subspace out(f, m);
    out.basis_.reserve(rows.size());
    for (auto& r : rows) out.basis_.push_back(FieldVector{f, std::move(r)});
    return out;
}

Subspace Subspace::parse(const Field& f, int m, const std::string& text) {
    if (text.empty()) fail(Errc::BadSubspace, "empty subspace string");
    std::vector<FieldVector> vecs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(';', pos);
        std::string token = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                       : next - pos);
        if (token.empty()) fail(Errc::BadSubspace, "empty basis vector in \"" + text + "\"");
        if (static_cast<int>(token.size()) != m) {
            fail(Errc::BadSubspace, "basis vector \"" + token + "\" has length " +
                                        std::to_string(token.size()) + ", expected " +
                                        std::to_string(m));
        }
        vecs.push_back(FieldVector::from_digits(f, token));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return span(f, m, vecs);
}

bool Subspace::contains(const FieldVector& v) const {
    if (v.field != field_ || v.dim() != m_) {
        fail(Errc::DimensionMismatch, "membership test in wrong ambient space");
    }
    // Reduce v against the echelon basis.
    std::vector<int> w = v.coords;
    for (const auto& row : basis_) {
        int pc = 0;
        while (pc < m_ && row[pc] == 0) ++pc;
        int factor = w[static_cast<size_t>(pc)];
        if (factor == 0) continue;
        for (int j = 0; j < m_; ++j) {
            w[static_cast<size_t>(j)] = field_.sub(w[static_cast<size_t>(j)],
                                                   field_.mul(factor, row[j]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
}

Subspace Subspace::orthocomplement() const {
    // Null space of the basis matrix: free coordinates parametrize solutions.
    std::vector<std::vector<int>> rows;
    rows.reserve(basis_.size());
    for (const auto& v : basis_) rows.push_back(v.coords);
    std::vector<int> pivots = rref_rows(field_, rows, m_);

    std::vector<bool> is_pivot(static_cast<size_t>(m_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<FieldVector> null_basis;
    for (int free_col = 0; free_col < m_; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        FieldVector w = FieldVector::zero(field_, m_);
        w.coords[static_cast<size_t>(free_col)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            w.coords[static_cast<size_t>(pivots[i])] =
                field_.neg(rows[i][static_cast<size_t>(free_col)]);
        }
        null_basis.push_back(std::move(w));
    }
    return span(field_, m_, null_basis);
}

std::vector<FieldVector> Subspace::members() const {
    int t = dim();
    if (t > 12) fail(Errc::TooLarge, "refusing to list s^" + std::to_string(t) + " members");
    long long total = 1;
    for (int i = 0; i < t; ++i) total *= field_.order();
    std::vector<FieldVector> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<int> coeff(static_cast<size_t>(t), 0);
    for (long long idx = 0; idx < total; ++idx) {
        FieldVector v = FieldVector::zero(field_, m_);
        for (int i = 0; i < t; ++i) {
            if (coeff[static_cast<size_t>(i)] != 0) {
                v = add(v, scale(basis_[static_cast<size_t>(i)], coeff[static_cast<size_t>(i)]));
            }
        }
        out.push_back(std::move(v));
        // Odometer: last coefficient fastest.
        for (int i = t - 1; i >= 0; --i) {
            coeff[static_cast<size_t>(i)]++;
            if (coeff[static_cast<size_t>(i)] < field_.order()) break;
            coeff[static_cast<size_t>(i)] = 0;
        }
    }
    return out;
}

std::string Subspace::to_string() const {
    std::string out;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i > 0) out.push_back(';');
        out += basis_[i].digits();
    }
    return out;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && m_ == o.m_ && basis_ == o.basis_;
}

int Subspace::compare(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].coords != o.basis_[i].coords) {
            return basis_[i].coords < o.basis_[i].coords ? -1 : 1;
        }
    }
    return 0;
}

long long gaussian_binomial(int m, int t, int s) {
    if (t < 0 || t > m) return 0;
    // Product formula with exact division at each step.
    long long num = 1;
    long long result = 1;
    auto power = [&](int e) {
        long long p = 1;
        for (int i = 0; i < e; ++i) p *= s;
        return p;
    };
    (void)num;
    for (int i = 0; i < t; ++i) {
        long long top = power(m - i) - 1;
        long long bottom = power(i + 1) - 1;
        result = result * top / bottom; // exact in this product order
    }
    return result;
}

void for_each_subspace(const Field& f, int m, int t,
                       const std::function<void(const Subspace&)>& fn) {
    if (t < 0 || t > m) fail(Errc::DimensionMismatch, "subspace dimension out of range");
    if (t == 0) {
        fn(Subspace::zero(f, m));
        return;
    }
    // Pivot columns in lexicographic order.
    std::vector<int> piv(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) piv[static_cast<size_t>(i)] = i;
    const int s = f.order();
    while (true) {
        // Free cells: (row i, col j) with j > piv[i], j not a pivot column.
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> is_pivot(static_cast<size_t>(m), false);
        for (int p : piv) is_pivot[static_cast<size_t>(p)] = true;
        for (int i = 0; i < t; ++i) {
            for (int j = piv[static_cast<size_t>(i)] + 1; j < m; ++j) {
                if (!is_pivot[static_cast<size_t>(j)]) free_cells.emplace_back(i, j);
            }
        }
        std::vector<int> value(free_cells.size(), 0);
        bool more = true;
        while (more) {
            std::vector<FieldVector> rows;
            rows.reserve(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i) {
                FieldVector v = FieldVector::zero(f, m);
                v.coords[static_cast<size_t>(piv[static_cast<size_t>(i)])] = 1;
                rows.push_back(std::move(v));
            }
            for (size_t c = 0; c < free_cells.size(); ++c) {
                rows[static_cast<size_t>(free_cells[c].first)]
                    .coords[static_cast<size_t>(free_cells[c].second)] = value[c];
            }
            Subspace sub = Subspace::span(f, m, rows); // already canonical; span re-checks
            fn(sub);
            // Odometer over free-cell values, last cell fastest.
            more = false;
            for (size_t c = free_cells.size(); c-- > 0;) {
                if (++value[c] < s) {
                    more = true;
                    break;
                }
                value[c] = 0;
            }
        }
        // Next pivot combination.
        int i = t - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == m - t + i) --i;
        if (i < 0) break;
        piv[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < t; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int m, int t) {
    std::vector<Subspace> out;
    for_each_subspace(f, m, t, [&](const Subspace& v) { out.push_back(v); });
    return out;
}

} // namespace potb
