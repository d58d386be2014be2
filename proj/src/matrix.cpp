#include "neargroup/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace neargroup {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Cyclotomic& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n, int order) {
    Matrix m(n, n, Cyclotomic::zero(order));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(order);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Cyclotomic>& d) {
    int order = d.empty() ? 1 : d.front().order();
    Matrix m(d.size(), d.size(), Cyclotomic::zero(order));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) { return *this += -o; }

Matrix& Matrix::operator*=(const Cyclotomic& s) {
    for (auto& x : data_)
        if (!x.is_zero()) x *= s;
    return *this;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

std::size_t Matrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_)
        if (!x.is_zero()) ++n;
    return n;
}

Matrix Matrix::lift(int n) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x.lift(n);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    int order = 1;
    if (a.rows() && a.cols()) order = static_cast<int>(lcm_long(order, a(0, 0).order()));
    if (b.rows() && b.cols()) order = static_cast<int>(lcm_long(order, b(0, 0).order()));
    Matrix c(a.rows(), b.cols(), Cyclotomic::zero(order));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto& y = b(l, j);
                if (y.is_zero()) continue;
                c(i, j) += x * y;
            }
        }
    return c;
}

Matrix operator*(const Cyclotomic& s, Matrix a) { return a *= s; }

Matrix kronecker(const Matrix& a, const Matrix& b) {
    int order = 1;
    if (a.rows() && a.cols()) order = static_cast<int>(lcm_long(order, a(0, 0).order()));
    if (b.rows() && b.cols()) order = static_cast<int>(lcm_long(order, b(0, 0).order()));
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), Cyclotomic::zero(order));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    const auto& y = b(p, q);
                    if (!y.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * y;
                }
        }
    return k;
}

Cyclotomic det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Cyclotomic(1);
    Matrix a = m;
    Cyclotomic prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Cyclotomic::zero(a(k, k).order());
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        Cyclotomic prev_inv = prev.inverse();
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Cyclotomic v = a(k, k) * a(i, j);
                if (!a(i, k).is_zero() && !a(k, j).is_zero()) v -= a(i, k) * a(k, j);
                a(i, j) = v.is_zero() ? v : v * prev_inv;
            }
        prev = a(k, k);
    }
    Cyclotomic d = a(n - 1, n - 1);
    return negate ? -d : d;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

namespace {

// Reduced row echelon form in place; returns the pivot count.
std::size_t row_reduce(Matrix& a, std::size_t col_limit) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Cyclotomic inv = a(r, c).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Cyclotomic f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    return row_reduce(a, a.cols());
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n, Cyclotomic(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Cyclotomic(1);
    }
    if (row_reduce(aug, n) != n) throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace neargroup
