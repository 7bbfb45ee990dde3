#pragma once

#include "kss/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace kss {

using RatVector = std::vector<Rational>;

/// Dense rectangular matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch when the rows are ragged.
    explicit RatMatrix(std::vector<RatVector> rows);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    RatMatrix transpose() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// A·x. Throws DimensionMismatch.
RatVector multiply(const RatMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Unique solution of A·x = b for square nonsingular A, nullopt when singular.
/// Throws DimensionMismatch when A is not square or b has the wrong length.
std::optional<RatVector> solve_square_system(const RatMatrix& a, std::span<const Rational> b);

std::size_t rank(const RatMatrix& a);

}  // namespace kss
