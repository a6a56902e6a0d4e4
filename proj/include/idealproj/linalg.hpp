#pragma once

#include <cstddef>
#include <vector>

#include "idealproj/rational.hpp"

namespace idealproj {

// Which kernel implementation to run. Both produce bit-identical results:
// the arithmetic is exact and pivoting always takes the first nonzero row,
// so parallelism never changes the sequence of values, only who computes
// them. The serial kernels are the reference the parallel ones are tested
// against.
enum class Exec { serial, parallel };

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Exact determinant by Gaussian elimination with first-nonzero pivoting.
Rational determinant(Matrix m, Exec exec = Exec::serial);

// Solves A x = b exactly; throws SingularMatrixError when A is singular.
std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b,
                            Exec exec = Exec::serial);

// Solves A X = B columnwise in one elimination pass.
Matrix solve_many(const Matrix& a, const Matrix& b, Exec exec = Exec::serial);

std::size_t rank(Matrix m, Exec exec = Exec::serial);

// Incrementally maintained reduced echelon form over Q, used to test vectors
// for linear independence one at a time.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols, Exec exec = Exec::serial);

    // Reduces the vector against the rows absorbed so far. If a nonzero
    // residual remains it joins the echelon form and the call returns true;
    // otherwise the vector was dependent and the state is unchanged.
    bool absorb(std::vector<Rational> row);

    // Like absorb, but never modifies the state.
    bool is_independent(std::vector<Rational> row) const;

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t cols_;
    Exec exec_;
    std::vector<std::vector<Rational>> rows_;   // pairwise reduced, pivots = 1
    std::vector<std::size_t> pivots_;

    void reduce(std::vector<Rational>& row) const;
};

}  // namespace idealproj
