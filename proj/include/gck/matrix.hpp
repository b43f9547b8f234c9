#pragma once

#include <cassert>
#include <vector>

#include "gck/errors.hpp"

namespace gck {

// Minimal dense matrix over an exact scalar type (Int, Rat, Cyclotomic).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape mismatch");
        Matrix m(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
            }
        return m;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix sum shape");
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + rhs.data_[i];
        return m;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix diff shape");
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - rhs.data_[i];
        return m;
    }

    Matrix operator*(const T& s) const {
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
        return m;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    bool is_zero() const {
        for (const T& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/*
 * Rank by fraction-free (Bareiss) elimination. Exact over any integral domain
 * with exact division; over Int no fractions ever appear, over field scalars
 * it keeps intermediate entries as single products rather than quotients.
 */
template <typename T>
int rank_fraction_free(Matrix<T> m) {
    const int rows = m.rows(), cols = m.cols();
    T prev_pivot(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!(m.at(r, col) == T(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const T piv = m.at(rank, col);
        for (int r = rank + 1; r < rows; ++r) {
            const T head = m.at(r, col);
            for (int j = col; j < cols; ++j)
                m.at(r, j) = (m.at(r, j) * piv - head * m.at(rank, j)) / prev_pivot;
        }
        prev_pivot = piv;
        ++rank;
    }
    return rank;
}

// Gauss-Jordan to reduced row echelon form (field scalars). Returns pivot
// column indices.
template <typename T>
std::vector<int> rref_in_place(Matrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!(m.at(r, col) == T(0))) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        const T inv_piv = T(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv_piv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const T f = m.at(r, col);
            if (f == T(0)) continue;
            for (int j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Columns spanning the kernel of A (field scalars).
template <typename T>
Matrix<T> nullspace_basis(const Matrix<T>& a) {
    Matrix<T> m = a;
    std::vector<int> pivots = rref_in_place(m);
    std::vector<char> is_pivot(a.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    int free_count = a.cols() - static_cast<int>(pivots.size());
    Matrix<T> basis(a.cols(), free_count);
    int bi = 0;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.at(c, bi) = T(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.at(pivots[pr], bi) = T(0) - m.at(static_cast<int>(pr), c);
        ++bi;
    }
    return basis;
}

// Solves A X = B where the columns of B all lie in the column space of A.
// Throws NotInBasisSpan otherwise. Field scalars.
template <typename T>
Matrix<T> solve_exact(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve: row count mismatch");
    Matrix<T> aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<int> pivots = rref_in_place(aug);
    for (int c : pivots)
        if (c >= a.cols()) throw NotInBasisSpan("right-hand side is outside the column space");
    Matrix<T> x(a.cols(), b.cols());
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[pr], j) = aug.at(static_cast<int>(pr), a.cols() + j);
    // Non-pivot variables are set to zero; verify exactness for safety when
    // A does not have full column rank.
    if (static_cast<int>(pivots.size()) < a.cols()) {
        Matrix<T> check = a * x;
        if (!(check == b)) throw NotInBasisSpan("inconsistent linear system");
    }
    return x;
}

// Basis of the column space: the pivot columns of A, in order (field scalars).
template <typename T>
Matrix<T> column_space_basis(const Matrix<T>& a) {
    Matrix<T> m = a;
    std::vector<int> pivots = rref_in_place(m);
    Matrix<T> basis(a.rows(), static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) basis.at(i, static_cast<int>(k)) = a.at(i, pivots[k]);
    return basis;
}

} // namespace gck
