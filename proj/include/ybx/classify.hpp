#pragma once

#include "ybx/families.hpp"

#include <optional>
#include <string>
#include <utility>

namespace ybx {

template <class S>
struct Classification {
    FamilyCase tag;
    ConditionReport details;
};

namespace famdetail {

// Recover U with Y = U J U^{-1} for a rank-one square-zero Y (size >= 2):
// write Y = a b^T with b^T a = 0, set col 1 of U to a, col 2 to some w with
// b^T w = 1, and complete with kernel vectors of b^T.
template <class S>
std::optional<Matrix<S>> similarity_to_j(const Matrix<S>& y) {
    const std::size_t m = y.rows();
    if (m < 2 || !y.square() || y.is_zero()) return std::nullopt;
    if (!(y * y).is_zero() || rank(y) != 1) return std::nullopt;
    // a: first nonzero column
    std::size_t j0 = 0;
    bool found = false;
    for (std::size_t j = 0; j < m && !found; ++j)
        for (std::size_t i = 0; i < m && !found; ++i)
            if (!is_zero(y(i, j))) {
                j0 = j;
                found = true;
            }
    Matrix<S> a(m, 1);
    for (std::size_t i = 0; i < m; ++i) a(i, 0) = y(i, j0);
    std::size_t i0 = 0;
    while (is_zero(a(i0, 0))) ++i0;
    Matrix<S> bt(1, m);
    for (std::size_t j = 0; j < m; ++j) bt(0, j) = y(i0, j) / a(i0, 0);

    Matrix<S> u(m, m);
    for (std::size_t i = 0; i < m; ++i) u(i, 0) = a(i, 0);
    // w with b^T w = 1
    std::size_t jw = 0;
    while (is_zero(bt(0, jw))) ++jw;
    u(jw, 1) = one_like(bt(0, jw)) / bt(0, jw);
    // fill the rest from ker(b^T), keeping rank
    std::size_t next = 2;
    for (const auto& v : null_space(bt)) {
        if (next == m) break;
        Matrix<S> candidate = u;
        for (std::size_t i = 0; i < m; ++i) candidate(i, next) = v(i, 0);
        if (rank(candidate) == next + 1) {
            u = candidate;
            ++next;
        }
    }
    if (next != m || !is_invertible(u)) return std::nullopt;
    const S one = one_like(bt(0, jw));
    if (u * j_matrix(m, one) * inverse(u) != y) return std::nullopt;
    return u;
}

template <class S>
bool is_diag2(const Matrix<S>& m) {
    return m.rows() == 2 && m.cols() == 2 && is_zero(m(0, 1)) && is_zero(m(1, 0));
}
template <class S>
bool is_jordan2(const Matrix<S>& m) {
    return m.rows() == 2 && m.cols() == 2 && is_one(m(0, 1)) && is_zero(m(1, 0)) &&
           m(0, 0) == m(1, 1);
}

template <class S>
std::optional<Classification<S>> classify_idempotent(const SystemInstance<S>& sys,
                                                     const Matrix<S>& x, std::size_t r,
                                                     std::size_t s) {
    const std::size_t n = sys.n(), m = n - r;
    Matrix<S> y1 = x.block(0, 0, r, r), cc = x.block(0, r, r, m);
    Matrix<S> dd = x.block(r, 0, m, r), y2 = x.block(r, r, m, m);
    ConditionReport det;
    det.set("r", static_cast<long long>(r));
    det.set("s", static_cast<long long>(s));
    det.set("C", matrix_str(cc));
    det.set("D", matrix_str(dd));
    det.set("Y1", matrix_str(y1));
    det.set("Y2", matrix_str(y2));

    if (s == m) {
        // rank(A) = nullity(B): the eight block equations characterize solutions
        bool eq = (y1 * y1).is_zero() && (y2 * y2).is_zero() && (y1 * cc).is_zero() &&
                  (cc * y2).is_zero() && (dd * y1).is_zero() && (y2 * dd).is_zero() &&
                  cc * dd == y1 && dd * cc == y2;
        if (!eq) return std::nullopt;
        FamilyCase tag;
        if (y1.is_zero() && y2.is_zero())
            tag = FamilyCase::T41_i;
        else if (y1.is_zero())
            tag = FamilyCase::T41_ii;
        else if (y2.is_zero())
            tag = FamilyCase::T41_iii;
        else
            tag = FamilyCase::T41_iv;
        if (!y1.is_zero()) {
            auto u = similarity_to_j(y1);
            if (!u) return std::nullopt;  // square-zero but not rank one
            det.set(tag == FamilyCase::T41_iii ? "V" : "U1", matrix_str(*u));
        }
        if (!y2.is_zero()) {
            auto u = similarity_to_j(y2);
            if (!u) return std::nullopt;
            det.set(tag == FamilyCase::T41_ii ? "U" : "U2", matrix_str(*u));
        }
        return Classification<S>{tag, std::move(det)};
    }

    // rank(A) < nullity(B)
    const S one = matrix_one(sys.A);
    Matrix<S> bp(m, m);
    for (std::size_t i = 0; i < s; ++i) bp(i, i) = one;
    bool eq = (y1 * y1).is_zero() && (y1 * cc).is_zero() && (dd * y1).is_zero() &&
              dd * cc == bp * y2 * bp && cc * bp * dd == y1 && (cc * bp * y2).is_zero() &&
              (y2 * bp * dd).is_zero() && (y2 * bp * y2).is_zero();
    if (!eq) return std::nullopt;
    if (y1.is_zero()) return Classification<S>{FamilyCase::T42_i, std::move(det)};
    auto u = similarity_to_j(y1);
    if (!u) return std::nullopt;
    det.set("U", matrix_str(*u));
    return Classification<S>{FamilyCase::T42_ii, std::move(det)};
}

template <class S>
std::optional<Classification<S>> classify_2x2(const SystemInstance<S>& sys, const Matrix<S>& x) {
    const Matrix<S>&A = sys.A, &B = sys.B;
    const S zero{};
    ConditionReport det;
    auto pack = [&](FamilyCase tag) { return Classification<S>{tag, std::move(det)}; };

    if (is_diag2(A) && is_diag2(B)) {
        const S &a = A(0, 0), &b = A(1, 1), &c = B(0, 0), &d = B(1, 1);
        bool az = is_zero(a), bz = is_zero(b), cz = is_zero(c), dz = is_zero(d);
        if (!az && !bz && !cz && !dz) {
            auto matches = [&](std::size_t i, std::size_t j, const S& v) { return x(i, j) == v; };
            S x11 = a * a / c, x22 = b * b / d;
            if (matches(0, 0, zero) && matches(1, 1, x22) && is_zero(x(1, 0))) {
                det.set("alpha", x(0, 1).str());
                return pack(FamilyCase::P51_i);
            }
            if (matches(0, 0, zero) && matches(1, 1, x22) && is_zero(x(0, 1))) {
                det.set("alpha", x(1, 0).str());
                return pack(FamilyCase::P51_i);
            }
            if (matches(0, 0, x11) && matches(1, 1, x22) && is_zero(x(0, 1))) {
                det.set("alpha", x(1, 0).str());
                return pack(FamilyCase::P51_ii);
            }
            if (matches(0, 0, x11) && matches(1, 1, x22) && is_zero(x(1, 0))) {
                det.set("alpha", x(0, 1).str());
                return pack(FamilyCase::P51_iii);
            }
            if (matches(0, 0, x11) && matches(1, 1, zero) && is_zero(x(1, 0))) {
                det.set("alpha", x(0, 1).str());
                return pack(FamilyCase::P51_iv);
            }
            if (matches(0, 0, x11) && matches(1, 1, zero) && is_zero(x(0, 1))) {
                det.set("alpha", x(1, 0).str());
                return pack(FamilyCase::P51_iv);
            }
            if (is_invertible(x)) {
                UniPoly<S> target({a * c * (b * d), -(a * c + b * d), one_like(a)});
                if (char_poly(x * x) == target) {
                    det.set("char_poly_X2", unipoly_str(char_poly(x * x)));
                    return pack(FamilyCase::P51_v);
                }
            }
            return std::nullopt;
        }
        if (az && !bz && !cz && !dz) {
            if (is_zero(x(0, 0)) && is_zero(x(0, 1)) && is_zero(x(1, 0)) &&
                x(1, 1) == d * d / b)
                return pack(FamilyCase::P52_i);
            return std::nullopt;
        }
        if (!az && bz && !cz && !dz) {
            if (x(0, 0) == c * c / a && is_zero(x(0, 1)) && is_zero(x(1, 0)) &&
                is_zero(x(1, 1)))
                return pack(FamilyCase::P52_ii);
            return std::nullopt;
        }
        if (az && cz && !bz && !dz) {
            if (is_zero(x(0, 1)) && is_zero(x(1, 1))) {
                det.set("alpha", x(0, 0).str());
                det.set("beta", x(1, 0).str());
                return pack(FamilyCase::P53);
            }
            if (is_zero(x(1, 0)) && is_zero(x(1, 1))) {
                det.set("alpha", x(0, 0).str());
                det.set("beta", x(0, 1).str());
                return pack(FamilyCase::P53);
            }
            if (is_zero(x(0, 1)) && is_zero(x(1, 0)) && x(1, 1) == b * b / d) {
                det.set("alpha", x(0, 0).str());
                return pack(FamilyCase::P53);
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    if (is_jordan2(A) && is_diag2(B)) {
        const S &a = A(0, 0), &b = B(0, 0), &c = B(1, 1);
        if (is_zero(a)) {
            if (is_zero(b) && !is_zero(c) && is_zero(x(1, 0)) && is_zero(x(1, 1))) {
                det.set("alpha", x(0, 0).str());
                det.set("beta", x(0, 1).str());
                return pack(FamilyCase::P54_a_ii);
            }
            if (!is_zero(b) && is_zero(c) && is_zero(x(0, 0)) && is_zero(x(1, 0))) {
                det.set("alpha", x(0, 1).str());
                det.set("beta", x(1, 1).str());
                return pack(FamilyCase::P54_a_iii);
            }
        }
        return std::nullopt;
    }

    if (is_jordan2(A) && is_jordan2(B)) {
        const S &a = A(0, 0), &b = B(0, 0);
        if (!is_zero(a) && a == b) {
            if (x == A) return pack(FamilyCase::P55_i);
            // [[a + t, alpha], [-a^2, a - t]] with t^2 = a^2 alpha
            if (x(1, 0) == -(a * a) && x(0, 0) + x(1, 1) == a + a) {
                S t = x(0, 0) - a;
                if (t * t == a * a * x(0, 1)) {
                    det.set("alpha", x(0, 1).str());
                    return pack(FamilyCase::P55_i);
                }
            }
            return std::nullopt;
        }
        if (!is_zero(a) && !is_zero(b) && a != b && a * a == b * b) {
            S alpha = x(0, 0);
            if (x(1, 0) == -(a * b) && x(1, 1) == (a + b) - alpha &&
                x(0, 1) * (a * b) == b * b + alpha * alpha - alpha * (a + b)) {
                det.set("alpha", alpha.str());
                return pack(FamilyCase::P55_ii);
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    return std::nullopt;
}

}  // namespace famdetail

// Identify which family case produces a verified solution X of a system in a
// recognized canonical shape, recovering parameters where the match is
// direct. The pair (A, B) may be given in either orientation; the equation
// system is symmetric under swapping A and B.
template <class S>
std::optional<Classification<S>> family_covers(const SystemInstance<S>& sys,
                                               const Matrix<S>& x) {
    if (!is_solution(sys, x)) return std::nullopt;
    if (x.is_zero()) {
        ConditionReport det;
        det.set("note", std::string("zero solution, member of every zero-parameter family"));
        return Classification<S>{FamilyCase::Trivial, std::move(det)};
    }
    for (const SystemInstance<S>& view : {sys, SystemInstance<S>{sys.B, sys.A}}) {
        if (auto shape = famdetail::canonical_idempotent_shape(view)) {
            auto cls = famdetail::classify_idempotent(view, x, shape->first, shape->second);
            if (cls) return cls;
        }
        if (view.n() == 2) {
            auto cls = famdetail::classify_2x2(view, x);
            if (cls) return cls;
        }
    }
    return std::nullopt;
}

}  // namespace ybx
