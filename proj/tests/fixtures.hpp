#pragma once

// Shared fixtures: the two worked 3x3/4x4 idempotent-complement examples with
// their published diagonalizers and Groebner bases, plus small helpers for
// writing exact matrices in tests.

#include "ybx/fp.hpp"
#include "ybx/matrix.hpp"
#include "ybx/multipoly.hpp"
#include "ybx/rational.hpp"

#include <string>
#include <vector>

namespace fix {

using ybx::Fp;
using ybx::Matrix;
using ybx::MultiPoly;
using ybx::Rational;
using ybx::VarTable;

inline Matrix<Rational> qm(const std::vector<std::vector<std::string>>& rows) {
    Matrix<Rational> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j)
            m(i, j) = Rational::parse(rows[i][j]);
    return m;
}

inline Matrix<Rational> qdiag(const std::vector<long>& d) {
    Matrix<Rational> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Rational(d[i]);
    return m;
}

inline Matrix<Fp> fpm(std::uint32_t p, const std::vector<std::vector<long>>& rows) {
    Matrix<Fp> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = Fp(rows[i][j], p);
    return m;
}

inline std::vector<MultiPoly> parse_all(const std::vector<std::string>& ss, const VarTable& vt) {
    std::vector<MultiPoly> out;
    for (const auto& s : ss) out.push_back(ybx::parse_poly(s, vt));
    return out;
}

// --- 3x3 example: rank(A) = nullity(B) = 2 ---------------------------------

inline Matrix<Rational> ex41_A() {
    return qm({{"-39/31", "-20/31", "-50/31"},
               {"14/31", "35/31", "10/31"},
               {"49/31", "14/31", "66/31"}});
}
inline Matrix<Rational> ex41_B() {
    return qm({{"70/31", "20/31", "50/31"},
               {"-14/31", "-4/31", "-10/31"},
               {"-49/31", "-14/31", "-35/31"}});
}
inline Matrix<Rational> ex41_U() {
    return qm({{"3", "1", "4"}, {"2", "3", "2"}, {"7", "2", "5"}});
}
inline Matrix<Rational> ex41_Uinv() {
    return qm({{"-11/31", "-3/31", "10/31"},
               {"-4/31", "13/31", "-2/31"},
               {"17/31", "-1/31", "-7/31"}});
}

inline std::vector<std::string> ex41_vars() {
    return {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
}

// the published 18-element basis (not reduced; compared by ideal equality)
inline std::vector<std::string> ex41_published_basis() {
    return {"a+e-i", "i^2",    "h*i",    "g*i",    "f*i",    "e*i",
            "d*i",   "c*i",    "b*i",    "f*h-e",  "c*h-b",  "f*g-d",
            "e*g-d*h", "c*g+e-i", "b*g+e*h", "c*e-b*f", "c*d+e*f", "b*d+e^2"};
}

// --- 4x4 example: rank(A) = 2 < nullity(B) = 3 ------------------------------

inline Matrix<Rational> ex42_A() {
    return qm({{"29/2", "24", "12", "33/2"},
               {"-1/2", "-2", "-1", "-7/2"},
               {"-43/2", "-34", "-17", "-41/2"},
               {"9/2", "8", "4", "13/2"}});
}
inline Matrix<Rational> ex42_B() {
    return qm({{"-12", "-15", "-9", "-6"},
               {"0", "0", "0", "0"},
               {"20", "25", "15", "10"},
               {"-4", "-5", "-3", "-2"}});
}
inline Matrix<Rational> ex42_U() {
    return qm({{"1", "2", "1", "2"}, {"3", "4", "2", "1"}, {"4", "5", "3", "2"}, {"1", "6", "2", "7"}});
}
inline Matrix<Rational> ex42_Uinv() {
    return qm({{"7", "5/2", "-3", "-3/2"},
               {"-2", "1/2", "0", "1/2"},
               {"-8", "-9/2", "5", "3/2"},
               {"3", "1/2", "-1", "-1/2"}});
}

inline std::vector<std::string> ex42_vars() {
    return {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "p", "q"};
}

inline std::vector<std::string> ex42_published_basis() {
    return {"a+f-k",      "l*p",        "k*p",        "j*p",        "i*p",
            "f*p",        "e*p",        "b*p",        "f*m-k*m-e*n", "d*m+h*n",
            "c*m+g*n",    "b*m+f*n",    "k*l",        "g*l",        "f*l",
            "e*l",        "c*l",        "b*l",        "k^2",        "j*k",
            "i*k",        "g*k",        "f*k",        "e*k",        "c*k",
            "b*k",        "g*j-f",      "c*j-b",      "g*i-e",      "f*i-e*j",
            "d*i+h*j",    "c*i+f-k",    "b*i+f*j",    "d*f-b*h-d*k", "c*f-b*g",
            "d*e+f*h",    "c*e+f*g",    "b*e+f^2",    "h*k*n",      "d*k*n",
            "d*g*n-c*h*n", "h*k*m",     "h*j*m-h*i*n", "e*j*m-e*i*n", "b*d*g-b*c*h"};
}

// --- 2x2 symbolic runs -------------------------------------------------------

// diagonal pair with a = c = 0: variables x1..x4, parameters b, d
inline std::vector<std::string> p53_vars() { return {"x1", "x2", "x3", "x4", "b", "d"}; }
inline std::vector<std::string> p53_published_basis() {
    return {"x3*x4*d", "x2*x4*d", "x2*x3*d", "x4*b^2-x4^2*d", "x4^2*b-x4*d^2",
            "x3*x4*b", "x2*x4*b", "x2*x3*b", "x4^3*d-x4*b*d^2"};
}

// nilpotent Jordan block against diag(b, c), X upper triangular:
// variables x1, x2, x4, parameters b, c
inline std::vector<std::string> p54_vars() { return {"x1", "x2", "x4", "b", "c"}; }
inline std::vector<std::string> p54_published_basis() {
    return {"x4*c^2",       "x2*b*c-x1*x4", "x4^2*c", "x1*b^2", "x1*x2*b+x2*x4*c",
            "x1^2*b",       "x1*x4^2",      "x1^2*x4", "x1*x2*x4*c"};
}

}  // namespace fix
