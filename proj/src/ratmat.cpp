#include "potb/ratmat.hpp"

#include <utility>

namespace potb {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int i = 0; i < cols_; ++i) {
            const Rat& x = (*this)(r, i);
            if (x == 0) continue;
            for (int c = 0; c < o.cols_; ++c) {
                if (o(i, c) != 0) out(r, c) += x * o(i, c);
            }
        }
    }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
    }
    RatMatrix out = *this;
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i] += o.v_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
    }
    RatMatrix out = *this;
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i] -= o.v_[i];
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : v_) {
        if (e != 0) return false;
    }
    return true;
}

RatMatrix RatMatrix::columns(const std::vector<int>& idx) const {
    RatMatrix out(rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < idx.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, idx[c]);
    }
    return out;
}

RatMatrix RatMatrix::hcat(const RatMatrix& o) const {
    if (rows_ != o.rows_) fail(Errc::DimensionMismatch, "hcat row mismatch");
    RatMatrix out(rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (int c = 0; c < o.cols_; ++c) out(r, cols_ + c) = o(r, c);
    }
    return out;
}

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int rank_so_far = 0;
    for (int col = 0; col < m.cols() && rank_so_far < m.rows(); ++col) {
        int sel = -1;
        for (int r = rank_so_far; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == -1) continue;
        if (sel != rank_so_far) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(rank_so_far, c));
        }
        Rat piv = m(rank_so_far, col);
        for (int c = col; c < m.cols(); ++c) m(rank_so_far, c) /= piv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank_so_far || m(r, col) == 0) continue;
            Rat factor = m(r, col);
            for (int c = col; c < m.cols(); ++c) {
                if (m(rank_so_far, c) != 0) m(r, c) -= factor * m(rank_so_far, c);
            }
        }
        pivots.push_back(col);
        ++rank_so_far;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatMatrix kernel_basis(const RatMatrix& m) {
    RatMatrix e = m;
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    RatMatrix out(m.cols() - static_cast<int>(pivots.size()), m.cols());
    int row = 0;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        out(row, free_col) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            out(row, pivots[i]) = -e(static_cast<int>(i), free_col);
        }
        ++row;
    }
    return out;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
    RatMatrix aug = m.hcat(RatMatrix::identity(m.rows()));
    std::vector<int> pivots = rref(aug);
    // All pivots must land in the left block, one per column.
    if (static_cast<int>(pivots.size()) != m.rows() || pivots.back() >= m.rows()) {
        fail(Errc::DimensionMismatch, "matrix is singular");
    }
    RatMatrix out(m.rows(), m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.rows(); ++c) out(r, c) = aug(r, m.rows() + c);
    }
    return out;
}

RatMatrix projector(const RatMatrix& a) {
    // Basis of the column space, then B (B'B)^{-1} B'.
    RatMatrix e = a;
    std::vector<int> pivots = rref(e);
    if (pivots.empty()) return RatMatrix(a.rows(), a.rows());
    RatMatrix b = a.columns(pivots);
    RatMatrix bt = b.transpose();
    RatMatrix gram_inv = inverse(bt * b);
    return b * gram_inv * bt;
}

} // namespace potb
