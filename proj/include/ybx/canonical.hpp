#pragma once

#include "ybx/matrix.hpp"
#include "ybx/system.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ybx {

// Idempotent orthogonal complements (A^2 = A, B^2 = B, AB = BA = 0) together
// with a simultaneous diagonalizer: S A S^{-1} = diag(I_r, 0) and
// S B S^{-1} = diag(0_r, I_s, 0). Since im(A) and im(B) intersect trivially
// and both lie in the kernel of the other, n - s >= r always holds.
template <class S>
struct IdempotentComplementPair {
    SystemInstance<S> base;
    Matrix<S> Smat;  // the diagonalizer, S A S^{-1} = JA
    Matrix<S> Sinv;
    std::size_t r, s;
    Matrix<S> JA, JB;
};

template <class S>
bool is_idempotent_pair(const SystemInstance<S>& sys) {
    return sys.A * sys.A == sys.A && sys.B * sys.B == sys.B && (sys.A * sys.B).is_zero() &&
           (sys.B * sys.A).is_zero();
}

// Build the diagonalizer from deterministic bases of col(A), col(B) and
// ker(A) ∩ ker(B) = ker(A+B); the three subspaces always sum directly.
template <class S>
IdempotentComplementPair<S> simultaneous_diagonalize(const SystemInstance<S>& sys) {
    if (!is_idempotent_pair(sys))
        throw std::invalid_argument(
            "simultaneous_diagonalize: inputs are not orthogonal idempotent complements");
    const std::size_t n = sys.n();
    std::vector<Matrix<S>> cols;
    for (auto& v : col_space_basis(sys.A)) cols.push_back(std::move(v));
    const std::size_t r = cols.size();
    for (auto& v : col_space_basis(sys.B)) cols.push_back(std::move(v));
    const std::size_t s = cols.size() - r;
    for (auto& v : null_space(sys.A + sys.B)) cols.push_back(std::move(v));
    if (cols.size() != n)
        throw std::logic_error("simultaneous_diagonalize: basis assembly lost dimensions");

    Matrix<S> t(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) t(i, j) = cols[j](i, 0);
    Matrix<S> smat = inverse(t);

    Matrix<S> ja = smat * sys.A * t;
    Matrix<S> jb = smat * sys.B * t;
    const S one = matrix_one(sys.A + sys.B);
    Matrix<S> expect_a(n, n), expect_b(n, n);
    for (std::size_t i = 0; i < r; ++i) expect_a(i, i) = one;
    for (std::size_t i = 0; i < s; ++i) expect_b(r + i, r + i) = one;
    if (ja != expect_a || jb != expect_b)
        throw std::logic_error("simultaneous_diagonalize: conjugation check failed");
    return {sys, std::move(smat), std::move(t), r, s, std::move(ja), std::move(jb)};
}

// X solves (A, B) iff S X S^{-1} solves (S A S^{-1}, S B S^{-1}).
template <class S>
Matrix<S> push_through(const IdempotentComplementPair<S>& pair, const Matrix<S>& x) {
    return pair.Smat * x * pair.Sinv;
}
template <class S>
Matrix<S> pull_back(const IdempotentComplementPair<S>& pair, const Matrix<S>& y) {
    return pair.Sinv * y * pair.Smat;
}

}  // namespace ybx
