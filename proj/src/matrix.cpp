#include "sgp/matrix.hpp"

#include <algorithm>
#include <utility>

#include "sgp/errors.hpp"

namespace sgp {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged initializer for Matrix");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("row length does not match column count");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> row_indices) const {
    Matrix out(row_indices.size(), cols_);
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(i, c) = (*this)(row_indices[i], c);
        }
    }
    return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> col_indices) const {
    Matrix out(rows_, col_indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < col_indices.size(); ++j) {
            out(r, j) = (*this)(r, col_indices[j]);
        }
    }
    return out;
}

Matrix Matrix::without_row(std::size_t skip) const {
    Matrix out(rows_ - 1, cols_);
    for (std::size_t r = 0, o = 0; r < rows_; ++r) {
        if (r == skip) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            out(o, c) = (*this)(r, c);
        }
        ++o;
    }
    return out;
}

Matrix Matrix::with_column(const Vector& column) const {
    if (column.size() != rows_) {
        throw DimensionError("appended column has wrong length");
    }
    Matrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(r, c) = (*this)(r, c);
        }
        out(r, cols_) = column[r];
    }
    return out;
}

Vector Matrix::operator*(const Vector& x) const {
    if (x.size() != cols_) {
        throw DimensionError("matrix-vector product: length mismatch");
    }
    Vector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out[r] += (*this)(r, c) * x[c];
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; ++c) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. `scale` receives the
// product of the multipliers, so det(original) = det(result) / scale.
IntegerRows integerize(const Matrix& m, std::size_t extra_cols, const Vector* extra, Integer& scale) {
    IntegerRows rows(m.rows(), std::vector<Integer>(m.cols() + extra_cols));
    scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        if (extra != nullptr) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*extra)[r].get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            rows[r][c] = q.get_num() * (lcm / q.get_den());
        }
        if (extra != nullptr) {
            const Rational& q = (*extra)[r];
            rows[r][m.cols()] = q.get_num() * (lcm / q.get_den());
        }
        scale *= lcm;
    }
    return rows;
}

struct Elimination {
    std::size_t rank = 0;
    int sign = 1;
};

// Bareiss fraction-free elimination pivoting only in columns < col_limit;
// later columns are carried along. Rows at index >= rank end up zero in the
// pivot columns. Every intermediate entry is a minor of the input, so the
// divisions are exact.
Elimination bareiss(IntegerRows& a, std::size_t col_limit) {
    Elimination out;
    const std::size_t nrows = a.size();
    if (nrows == 0) {
        return out;
    }
    const std::size_t ncols = a.front().size();
    Integer prev = 1;
    Integer tmp;
    std::size_t k = 0;
    for (std::size_t c = 0; c < col_limit && k < nrows; ++c) {
        std::size_t p = k;
        while (p < nrows && a[p][c] == 0) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            out.sign = -out.sign;
        }
        const Integer& pivot = a[k][c];
        for (std::size_t i = k + 1; i < nrows; ++i) {
            const Integer factor = a[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                tmp = pivot * a[i][j];
                tmp -= factor * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = pivot;
        ++k;
    }
    out.rank = k;
    return out;
}

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& a, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    const std::size_t nrows = a.size();
    std::size_t k = 0;
    for (std::size_t c = 0; c < col_limit && k < nrows; ++c) {
        std::size_t p = k;
        while (p < nrows && a[p][c] == 0) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        std::swap(a[p], a[k]);
        const Rational inv = 1 / a[k][c];
        for (auto& v : a[k]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == k || a[i][c] == 0) {
                continue;
            }
            const Rational factor = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
        pivots.push_back(c);
        ++k;
    }
    return pivots;
}

std::vector<Vector> rows_of(const Matrix& m, const Vector* extra) {
    std::vector<Vector> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].assign(m.row(r).begin(), m.row(r).end());
        if (extra != nullptr) {
            rows[r].push_back((*extra)[r]);
        }
    }
    return rows;
}

std::vector<Vector> basis_from_rref(const std::vector<Vector>& a, const std::vector<std::size_t>& pivots,
                                    std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -a[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Rational det(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    Integer scale;
    IntegerRows a = integerize(m, 0, nullptr, scale);
    Elimination e = bareiss(a, n);
    if (e.rank < n) {
        return 0;
    }
    Rational result(a[n - 1][n - 1] * e.sign, scale);
    result.canonicalize();
    return result;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    Integer scale;
    IntegerRows a = integerize(m, 0, nullptr, scale);
    return bareiss(a, m.cols()).rank;
}

ConsistencyReport rank_and_consistency(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    ConsistencyReport report;
    if (m.rows() == 0) {
        return report;
    }
    Integer scale;
    IntegerRows a = integerize(m, 1, &b, scale);
    report.rank = bareiss(a, m.cols()).rank;
    for (std::size_t r = report.rank; r < a.size(); ++r) {
        if (a[r][m.cols()] != 0) {
            report.consistent = false;
            break;
        }
    }
    return report;
}

std::vector<Vector> nullspace(const Matrix& m) {
    std::vector<Vector> a = rows_of(m, nullptr);
    auto pivots = rref(a, m.cols());
    return basis_from_rref(a, pivots, m.cols());
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    const std::size_t n = m.cols();
    std::vector<Vector> a = rows_of(m, &b);
    auto pivots = rref(a, n);
    for (std::size_t r = pivots.size(); r < a.size(); ++r) {
        if (a[r][n] != 0) {
            return std::nullopt;
        }
    }
    AffineSolution sol;
    sol.particular.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        sol.particular[pivots[i]] = a[i][n];
    }
    sol.nullspace_basis = basis_from_rref(a, pivots, n);
    return sol;
}

}  // namespace sgp
