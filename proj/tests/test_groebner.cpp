#include "ybx/equations.hpp"
#include "ybx/groebner.hpp"
#include "ybx/matrix.hpp"
#include "ybx/unipoly.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace ybx;
using fix::parse_all;

namespace {

// A computed basis must satisfy the defining properties regardless of how the
// pair selection went.
void check_groebner_properties(const GroebnerBasis& gb, const std::vector<MultiPoly>& gens) {
    for (const auto& f : gens) CHECK(normal_form(f, gb.gens).is_zero());
    for (const auto& g : gb.gens) {
        CHECK(g.leading().c.is_one());
        for (const auto& h : gb.gens) {
            if (&g == &h) continue;
            // reduced: no term of g is divisible by the leading monomial of h
            for (const auto& t : g.terms()) CHECK(!h.leading_monomial().divides(t.m));
        }
    }
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
            CHECK(normal_form(s_polynomial(gb.gens[i], gb.gens[j]), gb.gens).is_zero());
}

MultiPoly random_poly(const VarTable& vt, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(0, 2), coef(-4, 4);
    std::vector<Term> terms;
    for (int t = nterms(rng); t-- > 0;) {
        Monomial m = Monomial::one(vt.size());
        for (std::size_t v = 0; v < vt.size(); ++v) m.e[v] = expo(rng);
        terms.push_back({Rational(coef(rng)), m});
    }
    return MultiPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("lex order on monomials") {
    VarTable vt({"x1", "x2"});
    auto m = [&](std::uint32_t a, std::uint32_t b) { return Monomial({a, b}); };
    // 1 < x2 < x2^2 < ... < x1 < x2 x1 < ...
    CHECK(lex_compare(m(0, 0), m(0, 1)) < 0);
    CHECK(lex_compare(m(0, 1), m(0, 2)) < 0);
    CHECK(lex_compare(m(0, 3), m(1, 0)) < 0);  // x2^3 < x1
    CHECK(lex_compare(m(1, 0), m(1, 1)) < 0);  // x1 < x2 x1
    CHECK(lex_compare(m(1, 1), m(2, 0)) < 0);  // x2 x1 < x1^2
    CHECK(lex_compare(m(1, 1), m(1, 1)) == 0);
    CHECK_THROWS_AS(lex_compare(Monomial({1}), Monomial({1, 2})), std::invalid_argument);
}

TEST_CASE("polynomial parse and print round-trip") {
    VarTable vt({"x", "y"});
    auto p = parse_poly("3/2*x^2*y - y + 1", vt);
    CHECK(poly_to_string(p, vt) == "3/2*x^2*y - y + 1");
    CHECK(parse_poly(poly_to_string(p, vt), vt) == p);
    CHECK(parse_poly("0", vt).is_zero());
    CHECK(parse_poly("x*x", vt) == parse_poly("x^2", vt));
    CHECK(parse_poly("2*x - x", vt) == parse_poly("x", vt));
    CHECK_THROWS_AS(parse_poly("x + ", vt), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("z", vt), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x ++ y", vt), std::invalid_argument);
}

TEST_CASE("normal form") {
    VarTable vt({"x1", "x2"});
    auto f = parse_poly("x1^2", vt);
    auto g = parse_poly("x1 - x2", vt);
    CHECK(normal_form(f, {f}).is_zero());
    CHECK(normal_form(f, {g}) == parse_poly("x2^2", vt));
    CHECK(normal_form(parse_poly("x1", vt), {}) == parse_poly("x1", vt));
}

TEST_CASE("s-polynomial") {
    VarTable vt({"x1", "x2"});
    auto f = parse_poly("x1^2 - x2", vt);
    auto g = parse_poly("x1*x2 - 1", vt);
    CHECK(s_polynomial(f, f).is_zero());
    // coprime leads reduce to zero against the pair
    auto s0 = s_polynomial(parse_poly("x1", vt), parse_poly("x2", vt));
    CHECK(normal_form(s0, {parse_poly("x1", vt), parse_poly("x2", vt)}).is_zero());
    // hand Buchberger step: S(f, g) = x2*f - x1*g = x1 - x2^2, already irreducible
    auto s = s_polynomial(f, g);
    CHECK(normal_form(s, {f, g}) == parse_poly("x1 - x2^2", vt));
    CHECK_THROWS_AS(s_polynomial(MultiPoly(), f), std::invalid_argument);
}

TEST_CASE("buchberger on small ideals") {
    VarTable vt({"x1", "x2"});
    auto single = buchberger({parse_poly("x1 - x2", vt)}, vt);
    REQUIRE(single.gens.size() == 1);
    CHECK(single.gens[0] == parse_poly("x1 - x2", vt));

    // lex basis of <x^2+y^2-1, xy-1> eliminates to y^4 - y^2 + 1
    auto gens = parse_all({"x1^2 + x2^2 - 1", "x1*x2 - 1"}, vt);
    auto gb = buchberger(gens, vt);
    check_groebner_properties(gb, gens);
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0] == parse_poly("x1 + x2^3 - x2", vt));
    CHECK(gb.gens[1] == parse_poly("x2^4 - x2^2 + 1", vt));

    auto elim = eliminate(gb, 1);
    REQUIRE(elim.gens.size() == 1);
    CHECK(elim.gens[0] == parse_poly("x2^4 - x2^2 + 1", vt));

    // the elimination generator equals the Sylvester resultant in x1:
    // res(x1^2 + x2^2 - 1, x1 x2 - 1) computed by fraction-free elimination
    Matrix<UniPoly<Rational>> syl(3, 3);
    auto c = [](std::vector<long> v) {
        std::vector<Rational> r;
        for (long cc : v) r.emplace_back(cc);
        return UniPoly<Rational>(std::move(r));
    };
    syl(0, 0) = c({1});
    syl(0, 2) = c({-1, 0, 1});  // x2^2 - 1
    syl(1, 0) = c({0, 1});      // x2
    syl(1, 1) = c({-1});
    syl(2, 1) = c({0, 1});
    syl(2, 2) = c({-1});
    auto res = bareiss_det(syl, [](const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
        return a / b;
    });
    CHECK(res == c({1, 0, -1, 0, 1}));  // y^4 - y^2 + 1
}

TEST_CASE("zero and unit ideals") {
    VarTable vt({"x1", "x2"});
    CHECK(buchberger({MultiPoly(), MultiPoly()}, vt).gens.empty());
    auto gb = buchberger(parse_all({"x1 - 1", "x1"}, vt), vt);
    REQUIRE(gb.gens.size() == 1);
    CHECK(gb.gens[0] == parse_poly("1", vt));
}

TEST_CASE("eliminate bounds and identity case") {
    VarTable vt({"x1", "x2"});
    auto gb = buchberger(parse_all({"x1 - x2", "x2^2 - 1"}, vt), vt);
    auto e1 = eliminate(gb, 1);
    REQUIRE(e1.gens.size() == 1);
    CHECK(e1.gens[0] == parse_poly("x2^2 - 1", vt));
    CHECK(eliminate(gb, 2).gens.size() == gb.gens.size());
    CHECK_THROWS_AS(eliminate(gb, 3), std::invalid_argument);
}

TEST_CASE("ideal equality") {
    VarTable vt({"x1", "x2"});
    auto f = parse_all({"x1"}, vt);
    CHECK(ideal_equal(f, f, vt));
    CHECK(ideal_equal(f, parse_all({"2*x1"}, vt), vt));
    CHECK(!ideal_equal(f, parse_all({"x2"}, vt), vt));
}

TEST_CASE("groebner properties on random systems") {
    std::mt19937_64 rng(11);
    VarTable vt2({"x1", "x2"});
    for (int round = 0; round < 15; ++round) {
        std::vector<MultiPoly> gens = {random_poly(vt2, rng), random_poly(vt2, rng)};
        auto gb = buchberger(gens, vt2);
        check_groebner_properties(gb, gens);
    }
    VarTable vt3({"x1", "x2", "x3"});
    for (int round = 0; round < 8; ++round) {
        std::vector<MultiPoly> gens = {random_poly(vt3, rng), random_poly(vt3, rng),
                                       random_poly(vt3, rng)};
        auto gb = buchberger(gens, vt3);
        check_groebner_properties(gb, gens);
    }
}

TEST_CASE("every input generator reduces to zero against its own basis") {
    SystemInstance<Rational> sys(fix::qdiag({1, 1, 0}), fix::qdiag({0, 0, 1}));
    auto gens = equations_from_system(sys, fix::ex41_vars());
    VarTable vt(fix::ex41_vars());
    auto gb = buchberger(gens, vt);
    for (const auto& g : gens) CHECK(normal_form(g, gb.gens).is_zero());
    // and the published set reduces to zero against it as well
    for (const auto& g : fix::parse_all(fix::ex41_published_basis(), vt))
        CHECK(normal_form(g, gb.gens).is_zero());
}

TEST_CASE("full basis properties on the two large reproduction ideals") {
    {
        SystemInstance<Rational> sys(fix::qdiag({1, 1, 0}), fix::qdiag({0, 0, 1}));
        auto gens = equations_from_system(sys, fix::ex41_vars());
        VarTable vt(fix::ex41_vars());
        auto gb = buchberger(gens, vt);
        CHECK(gb.gens.size() == 10);
        check_groebner_properties(gb, gens);
    }
    {
        Matrix<Rational> a = fix::qdiag({1, 1, 0, 0});
        Matrix<Rational> b(4, 4);
        b(2, 2) = Rational(1);
        SystemInstance<Rational> sys(a, b);
        auto gens = equations_from_system(sys, fix::ex42_vars());
        VarTable vt(fix::ex42_vars());
        auto gb = buchberger(gens, vt);
        CHECK(gb.gens.size() == 27);
        check_groebner_properties(gb, gens);
    }
}

TEST_CASE("independent basis computations can run concurrently") {
    VarTable vt({"x1", "x2"});
    auto gens_a = parse_all({"x1^2 + x2^2 - 1", "x1*x2 - 1"}, vt);
    auto gens_b = parse_all({"x1^2 - x2", "x1^3 - x1"}, vt);
    GroebnerBasis ra, rb;
    std::thread ta([&] { ra = buchberger(gens_a, vt); });
    std::thread tb([&] { rb = buchberger(gens_b, vt); });
    ta.join();
    tb.join();
    CHECK(ra.gens.size() == 2);
    CHECK(rb.gens.size() == 3);
    CHECK(ra.gens == buchberger(gens_a, vt).gens);
    CHECK(rb.gens == buchberger(gens_b, vt).gens);
}

TEST_CASE("deterministic serialization") {
    VarTable vt(fix::ex41_vars());
    auto gens = parse_all(fix::ex41_published_basis(), vt);
    auto a = buchberger(gens, vt);
    auto b = buchberger(gens, vt);
    REQUIRE(a.gens.size() == b.gens.size());
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        CHECK(poly_to_string(a.gens[i], vt) == poly_to_string(b.gens[i], vt));
}
