#pragma once

// Exact rational linear algebra used for every dimension and rank claim.
// Matrices here are small (a few dozen rows/columns), so a dense
// representation with arbitrary-precision rationals is both simple and fast
// enough; floats never enter any rank or kernel computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace teichtet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RatVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector row(std::size_t r) const {
        return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void append_row(const RatVector& v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of Gauss-Jordan elimination: the reduced matrix, the pivot column
/// of each pivot row (in order), and the rank.
struct ReducedForm {
    RatMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form with leftmost-pivot selection. Deterministic.
ReducedForm reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right nullspace {x : m x = 0}. One vector per free column,
/// with a 1 in the free column's slot (the standard RREF kernel basis), in
/// increasing free-column order.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Does v solve m v = 0?
bool in_nullspace(const RatMatrix& m, const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace teichtet
