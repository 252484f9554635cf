#pragma once

#include "ybx/charpoly.hpp"
#include "ybx/report.hpp"
#include "ybx/system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

// ---------------------------------------------------------------------------
// Necessary-condition checkers and solution identities. Checkers that merely
// observe return a ConditionReport with exact witnesses; checkers whose
// statement presumes a verified solution throw on a violated precondition.
// ---------------------------------------------------------------------------

template <class S>
void require_solution(const SystemInstance<S>& sys, const Matrix<S>& x, const char* who) {
    if (!is_solution(sys, x))
        throw std::invalid_argument(std::string(who) + ": X is not a solution of the system");
}

// A'YA' = YB'Y rewritten through the block swap: with Z = YI'A' the identity
// becomes A'I'Z - Z(YI') = 0, a Sylvester-shaped relation. Reports the gcd of
// the characteristic polynomials of A'I' and YI' (nonconstant gcd = common
// spectrum over the closure), the necessary direction of the spectral clause.
template <class S>
ConditionReport iprime_check(const SystemInstance<S>& sys, const Matrix<S>& x) {
    if (!x.square() || x.rows() != sys.n())
        throw std::invalid_argument("iprime_check: X must be n x n");
    EmbeddedSystem<S> e = block_embed(sys);
    Matrix<S> y = diag_twice(x);
    Matrix<S> ai = e.Aprime * e.Iprime;
    Matrix<S> yi = y * e.Iprime;
    Matrix<S> z = yi * e.Aprime;
    Matrix<S> lhs = ai * z - z * yi;
    ConditionReport r;
    r.set("identity_holds", lhs.is_zero());
    UniPoly<S> ca = char_poly(ai), cy = char_poly(yi);
    UniPoly<S> g = uni_gcd(ca, cy);
    r.set("char_poly_AprimeIprime", unipoly_str(ca));
    r.set("char_poly_YIprime", unipoly_str(cy));
    r.set("spectral_gcd", unipoly_str(g));
    r.set("spectra_intersect", !g.is_constant());
    return r;
}

// If X solves the pair and also the single equation with C = A+B, then
// AXB + BXA = 0. Both hypotheses are checked by direct multiplication; the
// conclusion's left-hand side is always reported exactly.
template <class S>
ConditionReport sylvester_pair_check(const SystemInstance<S>& sys, const Matrix<S>& x) {
    if (!x.square() || x.rows() != sys.n())
        throw std::invalid_argument("sylvester_pair_check: X must be n x n");
    ConditionReport r;
    bool solves_pair = is_solution(sys, x);
    Matrix<S> c = sys.A + sys.B;
    bool solves_cybe = (c * x * c) == (x * c * x);
    Matrix<S> lhs = sys.A * x * sys.B + sys.B * x * sys.A;
    r.set("solves_system", solves_pair);
    r.set("solves_sum_ybe", solves_cybe);
    r.set("preconditions_hold", solves_pair && solves_cybe);
    r.set("conclusion_holds", lhs.is_zero());
    r.set("axb_plus_bxa", matrix_str(lhs));
    return r;
}

// Regularity and spectra of the pencils A + lambda B and A - lambda B; a
// nonconstant gcd of the two determinant polynomials witnesses a common
// spectrum point over the algebraic closure.
template <class S>
ConditionReport pencil_conditions(const SystemInstance<S>& sys) {
    UniPoly<S> plus = pencil_det(sys.A, sys.B);
    UniPoly<S> minus = pencil_det(sys.A, -sys.B);
    ConditionReport r;
    r.set("pencil_plus", unipoly_str(plus));
    r.set("pencil_minus", unipoly_str(minus));
    r.set("regular_plus", !plus.is_zero());
    r.set("regular_minus", !minus.is_zero());
    if (plus.is_zero() && minus.is_zero()) {
        r.set("spectra_intersect", true);  // every point is spectral for an identically zero pencil
    } else {
        UniPoly<S> g = uni_gcd(plus, minus);
        r.set("spectral_gcd", unipoly_str(g));
        r.set("spectra_intersect", !g.is_constant());
    }
    return r;
}

// For nonsingular A: B A^{-1} must have an eigenvalue pair summing to zero.
// Detected exactly as gcd(p(lambda), p(-lambda)) nonconstant.
template <class S>
ConditionReport eigen_pair_sum_zero(const SystemInstance<S>& sys) {
    if (!is_invertible(sys.A))
        throw std::invalid_argument("eigen_pair_sum_zero: A is singular");
    UniPoly<S> p = char_poly(sys.B * inverse(sys.A));
    UniPoly<S> g = uni_gcd(p, p.negate_arg());
    ConditionReport r;
    r.set("char_poly_BAinv", unipoly_str(p));
    r.set("gcd_with_negated", unipoly_str(g));
    r.set("pair_sum_zero_possible", !g.is_constant());
    return r;
}

// det(A)^3 = det(B)^3 is necessary for a nonsingular solution when A, B are
// nonsingular; with a nonsingular solution X at hand also checks
// det(X) = det(A^2)/det(B) = det(B^2)/det(A).
template <class S>
ConditionReport det_cube_condition(const SystemInstance<S>& sys) {
    S da = det(sys.A), db = det(sys.B);
    S ca = da * da * da, cb = db * db * db;
    ConditionReport r;
    r.set("det_A", da.str());
    r.set("det_B", db.str());
    r.set("det_A_cubed", ca.str());
    r.set("det_B_cubed", cb.str());
    r.set("cubes_equal", ca == cb);
    return r;
}

template <class S>
ConditionReport det_cube_condition(const SystemInstance<S>& sys, const Matrix<S>& x) {
    require_solution(sys, x, "det_cube_condition");
    ConditionReport r = det_cube_condition(sys);
    S da = det(sys.A), db = det(sys.B), dx = det(x);
    r.set("det_X", dx.str());
    bool all_nonsingular = !is_zero(da) && !is_zero(db) && !is_zero(dx);
    r.set("all_nonsingular", all_nonsingular);
    if (all_nonsingular) {
        r.set("detX_eq_detA2_over_detB", dx == da * da / db);
        r.set("detX_eq_detB2_over_detA", dx == db * db / da);
    }
    return r;
}

// X^{2k} B X = B X (BA)^k for every verified solution.
template <class S>
bool power_identity_check(const SystemInstance<S>& sys, const Matrix<S>& x, unsigned long k) {
    if (k == 0) throw std::invalid_argument("power_identity_check: k must be positive");
    require_solution(sys, x, "power_identity_check");
    Matrix<S> bx = sys.B * x;
    Matrix<S> lhs = mat_pow(x, 2 * k) * bx;
    Matrix<S> rhs = bx * mat_pow(sys.B * sys.A, k);
    return lhs == rhs;
}

// Phi_{BA}(X^2) B X = 0 with Phi the characteristic polynomial of BA.
template <class S>
bool charpoly_annihilation(const SystemInstance<S>& sys, const Matrix<S>& x) {
    require_solution(sys, x, "charpoly_annihilation");
    UniPoly<S> phi = char_poly(sys.B * sys.A);
    Matrix<S> lhs = mat_poly_eval(phi, x * x) * sys.B * x;
    return lhs.is_zero();
}

// f(X^2) BX = BX f(BA) for an arbitrary polynomial f; covers the exponential
// intertwining statements term by term.
template <class S>
bool poly_intertwine_check(const SystemInstance<S>& sys, const Matrix<S>& x,
                           const UniPoly<S>& f) {
    require_solution(sys, x, "poly_intertwine_check");
    Matrix<S> bx = sys.B * x;
    return mat_poly_eval(f, x * x) * bx == bx * mat_poly_eval(f, sys.B * sys.A);
}

// The three kernel lemmas, applied according to the singularity pattern of
// the pair. Reports which hypotheses applied and whether each conclusion held
// on the computed null-space bases.
template <class S>
ConditionReport kernel_lemma_checks(const SystemInstance<S>& sys, const Matrix<S>& x) {
    require_solution(sys, x, "kernel_lemma_checks");
    bool inv_a = is_invertible(sys.A), inv_b = is_invertible(sys.B);
    ConditionReport r;
    r.set("A_nonsingular", inv_a);
    r.set("B_nonsingular", inv_b);

    bool mixed = inv_a != inv_b;
    r.set("mixed_singularity_applies", mixed);
    if (mixed) r.set("solution_singular", !is_invertible(x));

    auto kernel_alternative = [&](const Matrix<S>& singular, const Matrix<S>& nonsingular) {
        for (const auto& u : null_space(singular)) {
            Matrix<S> xu = x * u;
            if (xu.is_zero()) continue;
            if (!(x * (nonsingular * xu)).is_zero()) return false;
        }
        return true;
    };
    if (!inv_a && inv_b) r.set("kernel_alternative_A_holds", kernel_alternative(sys.A, sys.B));
    if (!inv_b && inv_a) r.set("kernel_alternative_B_holds", kernel_alternative(sys.B, sys.A));

    if (inv_a && inv_b) {
        bool kills = true;
        for (const auto& v : null_space(x)) {
            kills = kills && (x * (sys.B * v)).is_zero() && (x * (sys.A * v)).is_zero();
        }
        r.set("kernel_killed_by_AB_images", kills);
    }
    return r;
}

// X annihilates the eigenspace and the generalized eigenspace of BA at an
// eigenvalue lambda that is not in the spectrum of X^2.
template <class S>
bool eigenspace_annihilation_check(const SystemInstance<S>& sys, const Matrix<S>& x,
                                   const S& lambda) {
    require_solution(sys, x, "eigenspace_annihilation_check");
    if (!is_invertible(sys.A) && !is_invertible(sys.B))
        throw std::invalid_argument("eigenspace_annihilation_check: neither A nor B is invertible");
    Matrix<S> ba = sys.B * sys.A;
    if (!is_zero(char_poly(ba).eval(lambda)))
        throw std::invalid_argument("eigenspace_annihilation_check: lambda is not an eigenvalue of BA");
    if (is_zero(char_poly(x * x).eval(lambda)))
        throw std::invalid_argument("eigenspace_annihilation_check: lambda lies in the spectrum of X^2");
    const std::size_t n = sys.n();
    Matrix<S> shifted = ba - lambda * Matrix<S>::identity(n, matrix_one(sys.A + sys.B));
    for (const auto& v : null_space(shifted))
        if (!(x * v).is_zero()) return false;
    for (const auto& v : null_space(mat_pow(shifted, n)))
        if (!(x * v).is_zero()) return false;
    return true;
}

// For nonsingular A, B, X: X^2 is similar to BA, witnessed by the explicit
// conjugator BX from the identity X^2(BX) = (BX)BA, plus equality of the
// characteristic polynomials.
template <class S>
bool spectrum_square_check(const SystemInstance<S>& sys, const Matrix<S>& x) {
    require_solution(sys, x, "spectrum_square_check");
    if (!is_invertible(sys.A) || !is_invertible(sys.B) || !is_invertible(x))
        throw std::invalid_argument("spectrum_square_check: A, B, X must all be nonsingular");
    Matrix<S> bx = sys.B * x;
    Matrix<S> ba = sys.B * sys.A;
    bool conjugation = (x * x) * bx == bx * ba;
    bool same_charpoly = char_poly(x * x) == char_poly(ba);
    return conjugation && same_charpoly;
}

// Conjugation by any invertible P commuting with A and B maps solutions to
// solutions (the algebraic core of the non-isolation statement).
template <class S>
Matrix<S> conjugate_solution(const SystemInstance<S>& sys, const Matrix<S>& x,
                             const Matrix<S>& p) {
    require_solution(sys, x, "conjugate_solution");
    if (!is_invertible(p)) throw std::invalid_argument("conjugate_solution: P is singular");
    if (p * sys.A != sys.A * p) throw std::invalid_argument("conjugate_solution: P does not commute with A");
    if (p * sys.B != sys.B * p) throw std::invalid_argument("conjugate_solution: P does not commute with B");
    Matrix<S> out = inverse(p) * x * p;
    if (!is_solution(sys, out))
        throw std::logic_error("conjugate_solution: conjugate failed residual verification");
    return out;
}

// X + alpha*C stays a solution when C annihilates A and B on both sides. The
// conclusion is residual-verified rather than trusted.
template <class S>
Matrix<S> extend_solution(const SystemInstance<S>& sys, const Matrix<S>& x, const Matrix<S>& c,
                          const S& alpha) {
    require_solution(sys, x, "extend_solution");
    if (!(sys.A * c).is_zero() || !(c * sys.A).is_zero())
        throw std::invalid_argument("extend_solution: AC = CA = 0 violated");
    if (!(sys.B * c).is_zero() || !(c * sys.B).is_zero())
        throw std::invalid_argument("extend_solution: BC = CB = 0 violated");
    Matrix<S> out = x + alpha * c;
    if (!is_solution(sys, out))
        throw std::logic_error("extend_solution: extension failed residual verification");
    return out;
}

// The exact cross terms that must vanish for X + alpha*C to remain a
// solution: XBC + CBX + alpha*CBC and XAC + CAX + alpha*CAC.
template <class S>
ConditionReport extend_cross_terms(const SystemInstance<S>& sys, const Matrix<S>& x,
                                   const Matrix<S>& c, const S& alpha) {
    Matrix<S> cross1 = x * sys.B * c + c * sys.B * x + alpha * (c * sys.B * c);
    Matrix<S> cross2 = x * sys.A * c + c * sys.A * x + alpha * (c * sys.A * c);
    ConditionReport r;
    r.set("cross_terms_r1", matrix_str(cross1));
    r.set("cross_terms_r2", matrix_str(cross2));
    r.set("cross_terms_vanish", cross1.is_zero() && cross2.is_zero());
    return r;
}

// X1 + X2 solves iff X1AX2 + X2AX1 = 0 and X1BX2 + X2BX1 = 0; the equivalence
// itself is re-verified by residual evaluation on the sum.
template <class S>
bool sum_compatibility(const SystemInstance<S>& sys, const Matrix<S>& x1, const Matrix<S>& x2) {
    require_solution(sys, x1, "sum_compatibility");
    require_solution(sys, x2, "sum_compatibility");
    bool cond_a = (x1 * sys.A * x2 + x2 * sys.A * x1).is_zero();
    bool cond_b = (x1 * sys.B * x2 + x2 * sys.B * x1).is_zero();
    bool sum_solves = is_solution(sys, x1 + x2);
    if ((cond_a && cond_b) != sum_solves)
        throw std::logic_error("sum_compatibility: bilinear conditions disagree with the residual");
    return cond_a && cond_b;
}

// A commuting solution of both the pair and the C = A+B equation, with A, B
// invertible and commuting, must be zero. Reports every hypothesis; makes the
// zero claim only when all of them hold.
template <class S>
ConditionReport commuting_solution_check(const SystemInstance<S>& sys, const Matrix<S>& x) {
    ConditionReport r;
    bool inv_a = is_invertible(sys.A), inv_b = is_invertible(sys.B);
    bool ab_commute = sys.A * sys.B == sys.B * sys.A;
    bool xa = x * sys.A == sys.A * x, xb = x * sys.B == sys.B * x;
    bool solves = is_solution(sys, x);
    Matrix<S> c = sys.A + sys.B;
    bool cybe = (c * x * c) == (x * c * x);
    r.set("A_nonsingular", inv_a);
    r.set("B_nonsingular", inv_b);
    r.set("AB_commute", ab_commute);
    r.set("X_commutes_with_A", xa);
    r.set("X_commutes_with_B", xb);
    r.set("solves_system", solves);
    r.set("solves_sum_ybe", cybe);
    bool all = inv_a && inv_b && ab_commute && xa && xb && solves && cybe;
    r.set("hypotheses_hold", all);
    if (all) r.set("x_is_zero", x.is_zero());
    return r;
}

}  // namespace ybx
