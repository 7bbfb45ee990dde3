#include "kss/linalg.hpp"

#include "kss/errors.hpp"

#include <string>
#include <utility>

namespace kss {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
        for (auto& v : r) data_.push_back(std::move(v));
    }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<RatVector> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    *this = RatMatrix(std::move(copy));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors with different lengths");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector multiply(const RatMatrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size())
        throw DimensionMismatch("matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                                std::to_string(x.size()) + " entries");
    RatVector out;
    out.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(dot(a.row(r), x));
    return out;
}

namespace {

// Reduces m in place to row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<RatVector> solve_square_system(const RatMatrix& a, std::span<const Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("solve_square_system needs a square matrix");
    if (b.size() != n) throw DimensionMismatch("right-hand side length does not match matrix");

    RatMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    if (row_reduce(aug, n).size() < n) return std::nullopt;

    RatVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return row_reduce(m, m.cols()).size();
}

}  // namespace kss
