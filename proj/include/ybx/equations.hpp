#pragma once

#include "ybx/groebner.hpp"
#include "ybx/matrix.hpp"
#include "ybx/multipoly.hpp"
#include "ybx/system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

inline bool has_unit_info(const MultiPoly&) { return true; }
inline MultiPoly one_like(const MultiPoly& p) {
    return MultiPoly::constant(Rational(1), p.nvars());
}

// The entry polynomials of AXA - XBX followed by BXB - XAX, row-major, zero
// entries dropped. A and B may themselves have polynomial entries
// (coefficient parameters as trailing variables). The explicit-X overload
// supports partially constrained unknowns (entries already forced to zero).
inline std::vector<MultiPoly> equations_from_symbolic(const Matrix<MultiPoly>& a,
                                                      const Matrix<MultiPoly>& b,
                                                      const Matrix<MultiPoly>& x) {
    if (!a.square() || !b.square() || a.rows() != b.rows() || !x.square() ||
        x.rows() != a.rows())
        throw std::invalid_argument("equations: A, B, X must be square of equal size");
    const std::size_t n = a.rows();
    Matrix<MultiPoly> r1 = a * x * a - x * b * x;
    Matrix<MultiPoly> r2 = b * x * b - x * a * x;
    std::vector<MultiPoly> out;
    for (const Matrix<MultiPoly>* r : {&r1, &r2})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(*r)(i, j).is_zero()) out.push_back((*r)(i, j));
    return out;
}

inline std::vector<MultiPoly> equations_from_symbolic(const Matrix<MultiPoly>& a,
                                                      const Matrix<MultiPoly>& b,
                                                      const VarTable& vars) {
    const std::size_t n = a.rows();
    if (vars.size() < n * n)
        throw std::invalid_argument("equations: need at least n^2 variables");
    Matrix<MultiPoly> x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x(i, j) = MultiPoly::variable(i * n + j, vars.size());
    return equations_from_symbolic(a, b, x);
}

// Rational coefficient pair: first n^2 names are the entries of X row-major.
template <class S>
std::vector<MultiPoly> equations_from_system(const SystemInstance<S>& sys,
                                             const std::vector<std::string>& var_names);

inline std::vector<MultiPoly> equations_from_system(const SystemInstance<Rational>& sys,
                                                    const std::vector<std::string>& var_names) {
    const std::size_t n = sys.n();
    if (var_names.size() != n * n)
        throw std::invalid_argument("equations_from_system: expected n^2 variable names");
    VarTable vt(var_names);
    Matrix<MultiPoly> a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = MultiPoly::constant(sys.A(i, j), vt.size());
            b(i, j) = MultiPoly::constant(sys.B(i, j), vt.size());
        }
    return equations_from_symbolic(a, b, vt);
}

}  // namespace ybx
