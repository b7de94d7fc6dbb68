#include "teichtet/exact.hpp"

#include "teichtet/errors.hpp"

namespace teichtet {

void RatMatrix::append_row(const RatVector& v) {
    if (cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw InternalError("append_row: column count mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

ReducedForm reduce(const RatMatrix& m) {
    ReducedForm out;
    out.rref = m;
    RatMatrix& a = out.rref;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // First nonzero entry in column c at or below row r.
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        }
        const Rational inv = Rational(1) / a.at(r, c);
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const RatMatrix& m) { return reduce(m).rank; }

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const ReducedForm red = reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
            v[red.pivot_cols[i]] = -red.rref.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_nullspace(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.cols()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s(0);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) != 0 && v[c] != 0) s += m.at(r, c) * v[c];
        }
        if (s != 0) return false;
    }
    return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw InternalError("dot: size mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace teichtet
