// Dense exact matrices over a Field, with the linear algebra the rest of the
// library needs: rank, determinant, RREF, kernel bases, and linear solves.
// Elimination pivots deterministically on the first nonzero entry of each
// column, so results are reproducible across runs and platforms.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "semicanon/field.hpp"

namespace semicanon {

class Matrix {
public:
    Matrix() : Matrix(0, 0, Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f);

    static Matrix identity(std::size_t n, const Field& f);
    // Convenience for literals: Matrix::of(f, {{1, 2}, {3, 4}}).
    static Matrix of(const Field& f,
                     std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Fe& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Fe& s) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    static Matrix hconcat(const Matrix& a, const Matrix& b);
    static Matrix vconcat(const Matrix& a, const Matrix& b);
    // Assemble from a grid of blocks; row heights and column widths must be
    // consistent across the grid.
    static Matrix assemble(const std::vector<std::vector<Matrix>>& blocks);
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::size_t rank() const;
    Fe det() const;  // throws NonSquare
    // Reduced row echelon form; pivot column indices are appended to
    // *pivot_cols if given.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    // Basis of {x : A x = 0}; each row of the result is one basis vector of
    // length cols(). Deterministic (free variables in column order).
    Matrix kernel() const;

    // One solution of A X = B (free variables zero), or nullopt if
    // inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<std::vector<Fe>> solve_vec(const std::vector<Fe>& b) const;
    // One solution of X A = B, or nullopt if inconsistent.
    std::optional<Matrix> solve_left(const Matrix& b) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Fe> data_;

    void check_shape(const Matrix& o) const;
};

}  // namespace semicanon
