#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace laby {

/// Dense row-major matrix over Integer or Scalar.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
        std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > r_ || c0 + nc > c_) throw DomainError("matrix block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DomainError("matrix block out of range");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const T& s = T(1)) {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DomainError("matrix block out of range");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) += s * b(i, j);
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= T(-1); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DomainError("matrix product shape mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out(r_, std::vector<T>(c_));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }

private:
    void same_shape(const Matrix& o) const {
        if (o.r_ != r_ || o.c_ != c_) throw DomainError("matrix shape mismatch");
    }

    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Scalar>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
    return r;
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> s(a.rows() + b.rows(), a.cols() + b.cols());
    s.set_block(0, 0, a);
    s.set_block(a.rows(), a.cols(), b);
    return s;
}

/// Integer row echelon form by unimodular row operations; zero rows are dropped.
/// Row i has its leading entry (positive) strictly right of that of row i-1,
/// and every entry below a leading entry is zero.
inline IntMatrix integer_row_echelon(IntMatrix m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        while (true) {
            // smallest nonzero |entry| in this column at or below pivot_row
            std::optional<std::size_t> best;
            for (std::size_t i = pivot_row; i < m.rows(); ++i)
                if (m(i, col) != 0 && (!best || abs(m(i, col)) < abs(m(*best, col)))) best = i;
            if (!best) break;
            if (*best != pivot_row)
                for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(*best, j), m(pivot_row, j));
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
                if (m(i, col) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(pivot_row, j);
                if (m(i, col) != 0) done = false;
            }
            if (done) {
                if (m(pivot_row, col) < 0)
                    for (std::size_t j = 0; j < m.cols(); ++j) m(pivot_row, j) = -m(pivot_row, j);
                ++pivot_row;
                break;
            }
        }
    }
    return m.block(0, 0, pivot_row, m.cols());
}

/// Columns forming a Z-basis of the column span of m, in column echelon form.
inline IntMatrix image_basis(const IntMatrix& m) { return integer_row_echelon(m.transpose()).transpose(); }

/// Solves basis * x = v for integer x, where basis is in the column echelon
/// form produced by image_basis. Returns nullopt if v is not in the span.
inline std::optional<IntMatrix> solve_in_basis(const IntMatrix& basis, IntMatrix v) {
    if (v.rows() != basis.rows()) throw DomainError("solve_in_basis: shape mismatch");
    IntMatrix x(basis.cols(), v.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        std::size_t p = 0;
        while (p < basis.rows() && basis(p, c) == 0) ++p;
        if (p == basis.rows()) throw DomainError("solve_in_basis: zero basis column");
        for (std::size_t k = 0; k < v.cols(); ++k) {
            for (std::size_t i = 0; i < p; ++i) {
                // entries above the pivot must already be cleared
                if (v(i, k) != 0) return std::nullopt;
            }
            if (v(p, k) % basis(p, c) != 0) return std::nullopt;
            Integer q = v(p, k) / basis(p, c);
            x(c, k) = q;
            if (q != 0)
                for (std::size_t i = 0; i < basis.rows(); ++i) v(i, k) -= q * basis(i, c);
        }
    }
    if (!v.is_zero()) return std::nullopt;
    return x;
}

}  // namespace laby
