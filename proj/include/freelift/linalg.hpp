#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <vector>

#include "freelift/errors.hpp"
#include "freelift/kernels.hpp"
#include "freelift/scalar.hpp"

namespace freelift {

template <class T>
using Vec = std::vector<T>;

// Dense row-major matrix over Rat or double.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, Num<T>::zero()) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(std::size_t(rows_) * cols_);
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Num<T>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
    T* row_ptr(int i) { return data_.data() + std::size_t(i) * cols_; }
    const T* row_ptr(int i) const { return data_.data() + std::size_t(i) * cols_; }

    Vec<T> col(int j) const {
        Vec<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec<T> row(int i) const { return Vec<T>(row_ptr(i), row_ptr(i) + cols_); }
    void set_col(int j, const Vec<T>& v) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    Vec<T> data_;
};

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw ValidationError("matmul: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const T& f = a(i, k);
            if (Num<T>::is_zero(f)) continue;
            if constexpr (std::is_same_v<T, double>) {
                kernels::axpy(c.row_ptr(i), b.row_ptr(k), f, std::size_t(b.cols()));
            } else {
                const T* brow = b.row_ptr(k);
                T* crow = c.row_ptr(i);
                for (int j = 0; j < b.cols(); ++j) crow[j] += f * brow[j];
            }
        }
    }
    return c;
}

template <class T>
Vec<T> matvec(const Matrix<T>& a, const Vec<T>& x) {
    if (a.cols() != int(x.size())) throw ValidationError("matvec: shape mismatch");
    Vec<T> y(a.rows(), Num<T>::zero());
    for (int i = 0; i < a.rows(); ++i) {
        if constexpr (std::is_same_v<T, double>) {
            y[i] = kernels::dot(a.row_ptr(i), x.data(), x.size());
        } else {
            T s = Num<T>::zero();
            const T* row = a.row_ptr(i);
            for (int j = 0; j < a.cols(); ++j) s += row[j] * x[j];
            y[i] = s;
        }
    }
    return y;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("mat_add: shape mismatch");
    Matrix<T> c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("mat_sub: shape mismatch");
    Matrix<T> c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_scale(const Matrix<T>& a, const T& f) {
    Matrix<T> c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= f;
    return c;
}

template <class T>
T max_abs(const Matrix<T>& a) {
    T m = Num<T>::zero();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            T v = Num<T>::abs(a(i, j));
            if (v > m) m = v;
        }
    return m;
}

template <class T>
bool mat_approx_eq(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!Num<T>::eq(a(i, j), b(i, j))) return false;
    return true;
}

namespace detail {

// Row echelon elimination in place. Returns pivot (row, col) pairs.
// Exact mode picks the first nonzero pivot; float mode picks the largest
// magnitude above a threshold scaled to the matrix.
template <class T>
std::vector<std::pair<int, int>> eliminate(Matrix<T>& a) {
    const int m = a.rows(), n = a.cols();
    T scale = max_abs(a);
    if (Num<T>::is_zero(scale)) scale = Num<T>::one();
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        if constexpr (Num<T>::exact) {
            for (int i = r; i < m; ++i)
                if (!Num<T>::is_zero(a(i, c))) {
                    piv = i;
                    break;
                }
        } else {
            T best = float_tolerance() * scale;
            for (int i = r; i < m; ++i) {
                T v = Num<T>::abs(a(i, c));
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
        const T inv_src = a(r, c);
        for (int j = c; j < n; ++j) a(r, j) /= inv_src;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const T f = a(i, c);
            if (Num<T>::is_zero(f)) continue;
            if constexpr (std::is_same_v<T, double>) {
                kernels::axpy(a.row_ptr(i) + c, a.row_ptr(r) + c, -f, std::size_t(n - c));
            } else {
                for (int j = c; j < n; ++j) a(i, j) -= f * a(r, j);
            }
            a(i, c) = Num<T>::zero();
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class T>
int rank(Matrix<T> a) {
    return int(detail::eliminate(a).size());
}

// Solves A x = b; nullopt when inconsistent. Underdetermined systems get the
// particular solution with free variables at zero.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
    if (a.rows() != int(b.size())) throw ValidationError("solve: shape mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = detail::eliminate(aug);
    for (const auto& [r, c] : pivots)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
    Vec<T> x(a.cols(), Num<T>::zero());
    for (const auto& [r, c] : pivots) x[c] = aug(r, a.cols());
    return x;
}

// Solves A X = B columnwise; nullopt when any column is inconsistent.
template <class T>
std::optional<Matrix<T>> solve_matrix(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw ValidationError("solve_matrix: shape mismatch");
    Matrix<T> aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    auto pivots = detail::eliminate(aug);
    for (const auto& [r, c] : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix<T> x(a.cols(), b.cols());
    for (const auto& [r, c] : pivots)
        for (int j = 0; j < b.cols(); ++j) x(c, j) = aug(r, a.cols() + j);
    return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw ValidationError("inverse: not square");
    auto x = solve_matrix(a, Matrix<T>::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank(*x) < a.rows()) return std::nullopt;
    return x;
}

// Columns spanning the null space of A (empty matrix when trivial).
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& a) {
    Matrix<T> e = a;
    auto pivots = detail::eliminate(e);
    std::vector<bool> is_pivot(a.cols(), false);
    for (const auto& [r, c] : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<T> k(a.cols(), int(free_cols.size()));
    for (int j = 0; j < int(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k(fc, j) = Num<T>::one();
        for (const auto& [r, c] : pivots) k(c, j) = -e(r, fc);
    }
    return k;
}

// Indices of a maximal independent column subset, scanned left to right.
template <class T>
std::vector<int> independent_columns(const Matrix<T>& a) {
    Matrix<T> e = a;
    auto pivots = detail::eliminate(e);
    std::vector<int> cols;
    cols.reserve(pivots.size());
    for (const auto& [r, c] : pivots) cols.push_back(c);
    return cols;
}

// True when v lies in the column span of basis.
template <class T>
bool in_span(const Matrix<T>& basis, const Vec<T>& v) {
    return solve(basis, v).has_value();
}

}  // namespace freelift
