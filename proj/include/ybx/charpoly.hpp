#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ybx/fp.hpp"
#include "ybx/matrix.hpp"
#include "ybx/rational.hpp"
#include "ybx/unipoly.hpp"

namespace ybx {

template <class S>
S trace(const Matrix<S>& m) {
    if (!m.square()) throw std::invalid_argument("trace: matrix not square");
    S t;
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
    return t;
}

// det(lambda*I - M) expanded by fraction-free Bareiss over the polynomial
// ring. Valid over any coefficient field, in particular F_p with p <= n where
// Faddeev-LeVerrier's integer divisions break down.
template <class S>
UniPoly<S> char_poly_bareiss(const Matrix<S>& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    const S one = matrix_one(m);
    Matrix<UniPoly<S>> lam(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<S> c{-m(i, j)};
            if (i == j) c.push_back(one);
            lam(i, j) = UniPoly<S>(std::move(c));
        }
    return bareiss_det(lam, [](const UniPoly<S>& a, const UniPoly<S>& b) { return a / b; });
}

// Faddeev-LeVerrier: exact over the rationals, only divides by 1..n.
inline UniPoly<Rational> char_poly(const Matrix<Rational>& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    Matrix<Rational> id = Matrix<Rational>::identity(n, Rational(1));
    Matrix<Rational> acc = m;
    c[n - 1] = -trace(acc);
    for (std::size_t k = 2; k <= n; ++k) {
        acc = m * (acc + c[n - k + 1] * id);
        c[n - k] = -(trace(acc) / Rational(static_cast<long>(k)));
    }
    return UniPoly<Rational>(std::move(c));
}

inline UniPoly<Fp> char_poly(const Matrix<Fp>& m) { return char_poly_bareiss(m); }

// Horner evaluation of p at a square matrix.
template <class S>
Matrix<S> mat_poly_eval(const UniPoly<S>& p, const Matrix<S>& m) {
    if (!m.square()) throw std::invalid_argument("mat_poly_eval: matrix not square");
    const std::size_t n = m.rows();
    Matrix<S> acc(n, n);
    if (p.is_zero()) return acc;
    const S one = has_unit_info(p.lead()) ? one_like(p.lead()) : matrix_one(m);
    Matrix<S> id = Matrix<S>::identity(n, one);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + p.coeff(i) * id;
    return acc;
}

// det(A + lambda*B), the pencil determinant, again via Bareiss over the
// polynomial ring so it works over every supported coefficient field.
template <class S>
UniPoly<S> pencil_det(const Matrix<S>& a, const Matrix<S>& b) {
    if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("pencil_det: shape mismatch");
    const std::size_t n = a.rows();
    Matrix<UniPoly<S>> pm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pm(i, j) = UniPoly<S>(std::vector<S>{a(i, j), b(i, j)});
    return bareiss_det(pm, [](const UniPoly<S>& x, const UniPoly<S>& y) { return x / y; });
}

// All roots in F_p by scanning the field.
inline std::vector<Fp> field_roots(const UniPoly<Fp>& p, std::uint32_t modulus) {
    if (p.is_zero()) throw std::invalid_argument("field_roots: zero polynomial");
    std::vector<Fp> roots;
    for (std::uint32_t v = 0; v < modulus; ++v) {
        Fp x(v, modulus);
        if (p.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

namespace detail {
inline std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> lo, hi;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            lo.push_back(d);
            if (d * d != v) hi.push_back(v / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}
}  // namespace detail

// Rational roots via the rational root theorem (divisors of the integerized
// constant and leading coefficients), distinct roots in increasing order.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    UniPoly<Rational> work = p;
    // strip powers of x
    while (!work.is_zero() && work.coeff(0).is_zero() && work.degree() > 0) {
        if (roots.empty()) roots.push_back(Rational(0));
        std::vector<Rational> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = UniPoly<Rational>(std::move(shifted));
    }
    if (work.degree() < 1) {
        return roots;
    }
    mpz_class a0 = 1, an = 1;
    {
        // re-integerize the deflated polynomial
        mpz_class s2 = 1;
        for (const auto& c : work.coeffs()) s2 = s2 / gcd(s2, c.den()) * c.den();
        a0 = work.coeff(0).num() * (s2 / work.coeff(0).den());
        an = work.lead().num() * (s2 / work.lead().den());
    }
    for (const auto& pn : detail::positive_divisors(a0)) {
        for (const auto& qd : detail::positive_divisors(an)) {
            if (gcd(pn, qd) != 1) continue;
            for (int sgn : {1, -1}) {
                mpq_class cand(sgn * pn, qd);
                cand.canonicalize();
                Rational r{mpq_class(cand)};
                if (work.eval(r).is_zero()) {
                    bool seen = false;
                    for (const auto& known : roots) seen = seen || known == r;
                    if (!seen) roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace ybx
