#pragma once

#include "ybx/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ybx {

// Dense row-major matrix over an exact scalar (Rational, Fp, or any exact
// ring type providing +, -, *, ==, a default "zero" constructor and a free
// is_zero()). Field-only algorithms (rref, inverse, ...) live below as free
// functions and additionally require / and inv-like division.
template <class S>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n, const S& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<S>& entries() const { return e_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!ybx::is_zero<S>(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("Matrix: block out of range");
        Matrix b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
            throw std::invalid_argument("Matrix: set_block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_, cols_;
    std::vector<S> e_;
};

template <class S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix: shape mismatch in +");
    Matrix<S> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix: shape mismatch in -");
    Matrix<S> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a) {
    Matrix<S> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
    return r;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix<S> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            // no zero-skip: prime-field zeros carry their modulus through
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + aik * b(k, j);
        }
    return r;
}

template <class S>
Matrix<S> operator*(const S& c, const Matrix<S>& a) {
    Matrix<S> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b;
}

// --- field algorithms -------------------------------------------------------

// Fraction-free Bareiss elimination. Works over any integral domain where the
// supplied division is exact (fields trivially; polynomial rings via exact
// divrem). Pivoting picks the first nonzero entry in each column, so runs are
// deterministic across platforms.
template <class S, class Div>
S bareiss_det(Matrix<S> m, Div div) {
    if (!m.square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    bool negate = false;
    S prev;  // zero
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(m(piv, k))) ++piv;
        if (piv == n) {
            return S();  // singular: zero column below the diagonal
        }
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                S num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = (k == 0) ? std::move(num) : div(num, prev);
            }
            m(i, k) = S();
        }
        prev = m(k, k);
    }
    S d = m(n - 1, n - 1);
    return negate ? -d : d;
}

template <class S>
S det(const Matrix<S>& m) {
    return bareiss_det(m, [](const S& a, const S& b) { return a / b; });
}

// In-place reduced row echelon form; returns pivot column indices.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) m.swap_rows(piv, row);
        S lead = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / lead;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
    Matrix<S> t = m;
    return rref(t).size();
}

// Multiplicative one of the matrix's scalar domain. For Fp the modulus is
// recovered from any typed entry.
template <class S>
S matrix_one(const Matrix<S>& m) {
    for (const auto& e : m.entries())
        if (has_unit_info(e)) return one_like(e);
    return one_like(S());
}

// Null-space basis from the RREF, one column vector per free column, in free
// column order: entry 1 at the free column, minus the RREF coefficient at
// each pivot. Deterministic by construction.
template <class S>
std::vector<Matrix<S>> null_space(const Matrix<S>& m) {
    Matrix<S> r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    const S one = matrix_one(m);
    std::vector<Matrix<S>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Matrix<S> v(m.cols(), 1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, j);
        v(j, 0) = one;
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
    if (m.is_zero()) throw std::domain_error("inverse: singular matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    const S one = matrix_one(m);
    for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = one;
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    return aug.block(0, n, n, n);
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
    return m.square() && rank(m) == m.rows();
}

template <class S>
Matrix<S> mat_pow(const Matrix<S>& m, unsigned long k) {
    if (!m.square()) throw std::invalid_argument("mat_pow: matrix not square");
    Matrix<S> acc = Matrix<S>::identity(m.rows(), matrix_one(m));
    Matrix<S> base = m;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

// Canonical column-space basis: nonzero rows of rref(M^T), transposed back to
// column vectors. Deterministic, reduced-echelon derived.
template <class S>
std::vector<Matrix<S>> col_space_basis(const Matrix<S>& m) {
    Matrix<S> t = m.transpose();
    std::vector<std::size_t> pivots = rref(t);
    std::vector<Matrix<S>> basis;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Matrix<S> v(m.rows(), 1);
        for (std::size_t j = 0; j < m.rows(); ++j) v(j, 0) = t(k, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ybx
