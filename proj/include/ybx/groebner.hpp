#pragma once

#include "ybx/multipoly.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ybx {

// Remainder of multivariate division of f by the list G, taken in list
// order: repeatedly cancel the largest reducible term, move irreducible
// leading terms to the remainder. Every step is deterministic.
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.m)) {
                Rational c = lt.c / g.leading().c;
                h = h - g.times_term(c, lt.m / g.leading_monomial());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            h = h - MultiPoly::from_terms({lt});
        }
    }
    return MultiPoly::from_terms(remainder);
}

// lcm-cancellation of the leading terms of two nonzero polynomials.
inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly a = f.times_term(f.leading().c.inv(), l / f.leading_monomial());
    MultiPoly b = g.times_term(g.leading().c.inv(), l / g.leading_monomial());
    return a - b;
}

struct GroebnerBasis {
    std::vector<MultiPoly> gens;  // reduced, monic, sorted descending by leading monomial
    VarTable vars;
};

namespace detail {

// inter-reduce to the unique reduced basis: minimize by leading-monomial
// divisibility, then fully reduce each generator against the others
inline void reduce_basis(std::vector<MultiPoly>& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            MultiPoly gi = g[i];
            std::vector<MultiPoly> rest;
            rest.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) rest.push_back(g[j]);
            MultiPoly r = normal_form(gi, rest);
            if (r.is_zero()) {
                g.erase(g.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (r != gi) {
                g[i] = r;
                changed = true;
            }
        }
    }
    std::sort(g.begin(), g.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
}

}  // namespace detail

// Buchberger's algorithm, lex order. Pair selection: smallest lcm of leading
// monomials in the term order, ties by pair index, so the run is fully
// deterministic for a fixed input order. Applies the product criterion and
// the chain criterion before reducing an S-polynomial. Output is the reduced
// monic basis (unique for the ideal and the order).
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& input, const VarTable& vars) {
    std::vector<MultiPoly> g;
    for (const auto& f : input) {
        if (f.is_zero()) continue;
        if (f.nvars() != vars.size())
            throw std::invalid_argument("buchberger: polynomial/table variable count mismatch");
        g.push_back(f.monic());
    }
    if (g.empty()) return {{}, vars};

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending, handled;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // normal strategy: smallest lcm in lex order
        auto best = pending.begin();
        Monomial best_lcm =
            Monomial::lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l =
                Monomial::lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
            if (lex_compare(l, best_lcm) < 0) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        handled.insert({i, j});

        const Monomial &li = g[i].leading_monomial(), &lj = g[j].leading_monomial();
        // product criterion: coprime leading monomials
        if (best_lcm == li * lj) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!g[k].leading_monomial().divides(best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)}, jk{std::min(j, k), std::max(j, k)};
            if (handled.count(ik) && handled.count(jk)) skip = true;
        }
        if (skip) continue;

        MultiPoly h = normal_form(s_polynomial(g[i], g[j]), g);
        if (!h.is_zero()) {
            g.push_back(h.monic());
            push_pairs(g.size() - 1);
        }
    }

    detail::reduce_basis(g);
    return {std::move(g), vars};
}

// Lex elimination (the basis restricted to the trailing keep_suffix
// variables generates the elimination ideal).
inline GroebnerBasis eliminate(const GroebnerBasis& gb, std::size_t keep_suffix) {
    const std::size_t n = gb.vars.size();
    if (keep_suffix > n) throw std::invalid_argument("eliminate: keep_suffix out of range");
    const std::size_t drop = n - keep_suffix;
    std::vector<MultiPoly> kept;
    for (const auto& p : gb.gens) {
        bool ok = true;
        for (const auto& t : p.terms())
            for (std::size_t v = 0; v < drop && ok; ++v)
                if (t.m.e[v]) ok = false;
        if (ok) kept.push_back(p);
    }
    return {std::move(kept), gb.vars};
}

// Equality of ideals: each set's members reduce to zero against the other's
// Groebner basis.
inline bool ideal_equal(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g,
                        const VarTable& vars) {
    GroebnerBasis gf = buchberger(f, vars);
    GroebnerBasis gg = buchberger(g, vars);
    for (const auto& p : f)
        if (!normal_form(p, gg.gens).is_zero()) return false;
    for (const auto& p : g)
        if (!normal_form(p, gf.gens).is_zero()) return false;
    return true;
}

}  // namespace ybx
