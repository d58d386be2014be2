#pragma once

#include "neargroup/cyclotomic.hpp"

#include <cstddef>
#include <vector>

namespace neargroup {

// Dense row-major matrix over cyclotomic scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, const Cyclotomic& fill);

    static Matrix identity(std::size_t n, int order = 1);
    static Matrix diagonal(const std::vector<Cyclotomic>& d);
    static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Cyclotomic& s);

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    std::size_t nonzero_count() const;

    // Rewrites every entry at a common order `n` (a multiple of each entry's order).
    Matrix lift(int n) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cyclotomic> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Cyclotomic& s, Matrix a);

// Row index (i, j) -> i * b.rows() + j, columns likewise.
Matrix kronecker(const Matrix& a, const Matrix& b);

// Fraction-free (Bareiss) elimination with row pivoting.
Cyclotomic det(const Matrix& m);
bool is_invertible(const Matrix& m);
// Gauss-Jordan; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace neargroup
