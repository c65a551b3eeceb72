#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "potb/error.hpp"

namespace potb {

/// The prime field F_s. Elements are canonical residues 0..s-1.
class Field {
public:
    explicit Field(int order); // throws NotPrime unless order is a prime >= 2

    int order() const { return s_; }
    int add(int a, int b) const { return (a + b) % s_; }
    int sub(int a, int b) const { return (a - b + s_) % s_; }
    int mul(int a, int b) const { return (a * b) % s_; }
    int neg(int a) const { return (s_ - a) % s_; }
    int inv(int a) const; // a != 0
    int reduce(long long a) const { return static_cast<int>(((a % s_) + s_) % s_); }

    bool operator==(const Field& o) const { return s_ == o.s_; }
    bool operator!=(const Field& o) const { return s_ != o.s_; }

private:
    int s_;
};

/// A length-m vector over F_s. Doubles as a run of EG(m,s) and as an
/// effect coefficient vector.
struct FieldVector {
    Field field;
    std::vector<int> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<size_t>(i)]; }
    bool is_zero() const;

    std::string digits() const; // "0102"; requires field order <= 10
    static FieldVector from_digits(const Field& f, const std::string& text);
    static FieldVector zero(const Field& f, int m);

    bool operator==(const FieldVector& o) const {
        return field == o.field && coords == o.coords;
    }
    bool operator!=(const FieldVector& o) const { return !(*this == o); }
    bool operator<(const FieldVector& o) const { return coords < o.coords; }
};

FieldVector add(const FieldVector& x, const FieldVector& y);
FieldVector scale(const FieldVector& x, int c);
int dot(const FieldVector& x, const FieldVector& y); // throws DimensionMismatch

/// A subspace of F_s^m held in canonical form: reduced row-echelon basis,
/// unit pivots, pivot columns strictly increasing. Two Subspace values are
/// equal iff they are the same subspace.
class Subspace {
public:
    static Subspace zero(const Field& f, int m);
    static Subspace span(const Field& f, int m, const std::vector<FieldVector>& vectors);
    static Subspace parse(const Field& f, int m, const std::string& text); // "0102;1010"

    const Field& field() const { return field_; }
    int ambient_dim() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FieldVector>& basis() const { return basis_; }

    bool contains(const FieldVector& v) const;
    Subspace orthocomplement() const;

    /// All s^t members, ordered lexicographically by basis coefficients.
    std::vector<FieldVector> members() const; // throws TooLarge if dim > 12

    std::string to_string() const; // basis rows joined by ';' ("" for the zero space)

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// Total order used for deterministic tie-breaking.
    int compare(const Subspace& o) const;

private:
    Subspace(const Field& f, int m) : field_(f), m_(m) {}
    Field field_;
    int m_;
    std::vector<FieldVector> basis_;
};

long long gaussian_binomial(int m, int t, int s);

/// Visits every t-dimensional subspace of F_s^m exactly once, in a fixed
/// deterministic order (pivot sets lexicographic, then free entries).
void for_each_subspace(const Field& f, int m, int t,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(const Field& f, int m, int t);

} // namespace potb
