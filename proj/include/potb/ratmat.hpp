#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "potb/error.hpp"

namespace potb {

using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix over the rationals. Every operation here is exact; nothing
/// in this module rounds.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& operator()(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    RatMatrix columns(const std::vector<int>& idx) const;
    /// Horizontal concatenation [this | o].
    RatMatrix hcat(const RatMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> v_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Rows form a basis of the null space {x : m x = 0}; (cols - rank) of them.
RatMatrix kernel_basis(const RatMatrix& m);

/// Exact inverse of a nonsingular square matrix.
RatMatrix inverse(const RatMatrix& m);

/// Orthogonal projector onto the column space of A: symmetric, idempotent,
/// invariant to the choice of spanning columns.
RatMatrix projector(const RatMatrix& a);

} // namespace potb
