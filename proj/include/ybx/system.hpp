#pragma once

#include "ybx/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ybx {

// Coefficient pair of the equation system  XAX = BXB,  XBX = AXA.
// Residuals are oriented as R1 = AXA - XBX, R2 = BXB - XAX (the two forms in
// the literature swap sides; they are the same pair of equations).
template <class S>
struct SystemInstance {
    Matrix<S> A, B;

    SystemInstance(Matrix<S> a, Matrix<S> b) : A(std::move(a)), B(std::move(b)) {
        if (!A.square() || !B.square() || A.rows() != B.rows())
            throw std::invalid_argument("SystemInstance: A, B must be square of equal size");
    }
    std::size_t n() const { return A.rows(); }
};

template <class S>
std::pair<Matrix<S>, Matrix<S>> residuals(const SystemInstance<S>& sys, const Matrix<S>& x) {
    if (!x.square() || x.rows() != sys.n())
        throw std::invalid_argument("residuals: X must be n x n");
    Matrix<S> r1 = sys.A * x * sys.A - x * sys.B * x;
    Matrix<S> r2 = sys.B * x * sys.B - x * sys.A * x;
    return {std::move(r1), std::move(r2)};
}

template <class S>
bool is_solution(const SystemInstance<S>& sys, const Matrix<S>& x) {
    auto [r1, r2] = residuals(sys, x);
    return r1.is_zero() && r2.is_zero();
}

// Block embedding: solutions X of the pair give Y = diag(X, X) solving the
// single equation A'YA' = YB'Y with A' = diag(B, A), B' = diag(A, B).
// I' is the block swap; I'^2 = I and I'B'I' = A'.
template <class S>
struct EmbeddedSystem {
    Matrix<S> Aprime, Bprime, Iprime;
};

template <class S>
EmbeddedSystem<S> block_embed(const SystemInstance<S>& sys) {
    const std::size_t n = sys.n();
    Matrix<S> ap(2 * n, 2 * n), bp(2 * n, 2 * n), ip(2 * n, 2 * n);
    ap.set_block(0, 0, sys.B);
    ap.set_block(n, n, sys.A);
    bp.set_block(0, 0, sys.A);
    bp.set_block(n, n, sys.B);
    const S one = matrix_one(sys.A + sys.B);
    Matrix<S> id = Matrix<S>::identity(n, one);
    ip.set_block(0, n, id);
    ip.set_block(n, 0, id);
    return {std::move(ap), std::move(bp), std::move(ip)};
}

template <class S>
Matrix<S> diag_twice(const Matrix<S>& x) {
    const std::size_t n = x.rows();
    Matrix<S> y(2 * n, 2 * n);
    y.set_block(0, 0, x);
    y.set_block(n, n, x);
    return y;
}

}  // namespace ybx
