#include "idealproj/linalg.hpp"

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

// row_r -= factor * row_p over columns [from, cols). The parallel kernel
// partitions columns; entries are updated independently, so the results are
// identical to the serial reference.
void axpy_serial(Matrix& m, std::size_t r, std::size_t p, const Rational& factor,
                 std::size_t from) {
    for (std::size_t j = from; j < m.cols(); ++j) {
        m.at(r, j) -= factor * m.at(p, j);
    }
}

// Eliminates column `col` from every row below `pivot_row`.
void eliminate_below_serial(Matrix& m, std::size_t pivot_row, std::size_t col) {
    const Rational& pivot = m.at(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
        if (m.at(r, col).is_zero()) continue;
        Rational factor = m.at(r, col) / pivot;
        axpy_serial(m, r, pivot_row, factor, col);
    }
}

void eliminate_below_parallel(Matrix& m, std::size_t pivot_row, std::size_t col) {
    const Rational pivot = m.at(pivot_row, col);
    const long long rows = static_cast<long long>(m.rows());
#pragma omp parallel for schedule(static)
    for (long long r = static_cast<long long>(pivot_row) + 1; r < rows; ++r) {
        const auto rr = static_cast<std::size_t>(r);
        if (m.at(rr, col).is_zero()) continue;
        Rational factor = m.at(rr, col) / pivot;
        axpy_serial(m, rr, pivot_row, factor, col);
    }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// In-place forward elimination with first-nonzero pivoting over the leading
// `col_limit` columns. Returns the pivot columns in order; each row swap
// flips *sign when given.
std::vector<std::size_t> forward_eliminate(Matrix& m, std::size_t col_limit, int* sign,
                                           Exec exec) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) continue;
        if (found != row) {
            swap_rows(m, found, row);
            if (sign) *sign = -*sign;
        }
        if (exec == Exec::parallel) {
            eliminate_below_parallel(m, row, col);
        } else {
            eliminate_below_serial(m, row, col);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void check_square(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatchError("matrix is " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + ", expected square");
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational determinant(Matrix m, Exec exec) {
    check_square(m);
    int sign = 1;
    std::vector<std::size_t> pivots = forward_eliminate(m, m.cols(), &sign, exec);
    if (pivots.size() < m.rows()) return Rational(0);
    Rational det(sign);
    for (std::size_t i = 0; i < m.rows(); ++i) det *= m.at(i, i);
    return det;
}

std::size_t rank(Matrix m, Exec exec) {
    return forward_eliminate(m, m.cols(), nullptr, exec).size();
}

Matrix solve_many(const Matrix& a, const Matrix& b, Exec exec) {
    check_square(a);
    const std::size_t n = a.rows();
    if (b.rows() != n) {
        throw DimensionMismatchError("right-hand side has " + std::to_string(b.rows()) +
                                     " rows, expected " + std::to_string(n));
    }
    Matrix aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, n + j) = b.at(i, j);
    }
    std::vector<std::size_t> pivots = forward_eliminate(aug, n, nullptr, exec);
    if (pivots.size() < n) throw SingularMatrixError("matrix is singular");
    // Full rank: row i has its pivot in column i. Back-substitute each
    // right-hand-side column.
    Matrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t ii = n; ii > 0; --ii) {
            const std::size_t i = ii - 1;
            Rational acc = aug.at(i, n + c);
            for (std::size_t j = i + 1; j < n; ++j) acc -= aug.at(i, j) * x.at(j, c);
            x.at(i, c) = acc / aug.at(i, i);
        }
    }
    return x;
}

std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b, Exec exec) {
    if (b.size() != a.rows()) {
        throw DimensionMismatchError("right-hand side has " + std::to_string(b.size()) +
                                     " entries, expected " + std::to_string(a.rows()));
    }
    Matrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    Matrix x = solve_many(a, rhs, exec);
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = x.at(i, 0);
    return out;
}

RowEchelon::RowEchelon(std::size_t cols, Exec exec) : cols_(cols), exec_(exec) {}

void RowEchelon::reduce(std::vector<Rational>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = row[pivots_[k]];
        if (factor.is_zero()) continue;
        const std::vector<Rational>& basis = rows_[k];
        if (exec_ == Exec::parallel) {
            const long long cols = static_cast<long long>(cols_);
#pragma omp parallel for schedule(static)
            for (long long j = 0; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] -=
                    factor * basis[static_cast<std::size_t>(j)];
            }
        } else {
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= factor * basis[j];
        }
    }
}

bool RowEchelon::is_independent(std::vector<Rational> row) const {
    if (row.size() != cols_) {
        throw DimensionMismatchError("vector has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(cols_));
    }
    reduce(row);
    for (const Rational& v : row) {
        if (!v.is_zero()) return true;
    }
    return false;
}

bool RowEchelon::absorb(std::vector<Rational> row) {
    if (row.size() != cols_) {
        throw DimensionMismatchError("vector has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(cols_));
    }
    reduce(row);
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!row[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == cols_) return false;
    const Rational scale = row[pivot];
    for (std::size_t j = pivot; j < cols_; ++j) row[j] /= scale;
    // Keep stored rows mutually reduced so one pass over them suffices.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = rows_[k][pivot];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) rows_[k][j] -= factor * row[j];
    }
    pivots_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
}

}  // namespace idealproj
