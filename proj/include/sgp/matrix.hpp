#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "sgp/rational.hpp"

namespace sgp {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    /// Rows `row_indices` (in the given order), all columns.
    Matrix select_rows(std::span<const std::size_t> row_indices) const;
    /// All rows, columns `col_indices` (in the given order).
    Matrix select_cols(std::span<const std::size_t> col_indices) const;
    Matrix without_row(std::size_t r) const;
    Matrix with_column(const Vector& column) const;

    Vector operator*(const Vector& x) const;
    Matrix operator*(const Matrix& other) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free elimination. The 0x0 determinant is 1.
/// Throws DimensionError for non-square input.
Rational det(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; its length is cols - rank.
std::vector<Vector> nullspace(const Matrix& m);

struct AffineSolution {
    Vector particular;
    std::vector<Vector> nullspace_basis;
};

/// Complete description of {x : m x = b}, or nullopt when the system is
/// inconsistent. Throws DimensionError if b.size() != m.rows().
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b);

/// Rank of `m` and whether `m x = b` has a solution, from one elimination
/// pass over the augmented system.
struct ConsistencyReport {
    std::size_t rank = 0;
    bool consistent = true;
};
ConsistencyReport rank_and_consistency(const Matrix& m, const Vector& b);

}  // namespace sgp
