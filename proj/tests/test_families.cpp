#include "ybx/classify.hpp"
#include "ybx/families.hpp"

#include "family_draws.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace ybx;
using fix::fpm;
using fix::qdiag;
using fix::qm;

TEST_CASE("T41-i: n=2, r=1, C=(1), D=(0)") {
    auto sys = draws::canonical_pair(2, 1, 1);
    FamilyParams<Rational> p;
    p.C = qm({{"1"}});
    p.D = Matrix<Rational>(1, 1);
    auto x = construct_thm41(sys, FamilyCase::T41_i, p);
    CHECK(x == qm({{"0", "1"}, {"0", "0"}}));
    CHECK(is_solution(sys, x));

    // zero parameters give the zero solution
    FamilyParams<Rational> z;
    z.C = Matrix<Rational>(1, 1);
    z.D = Matrix<Rational>(1, 1);
    CHECK(construct_thm41(sys, FamilyCase::T41_i, z).is_zero());

    // CD = 0 violated
    FamilyParams<Rational> bad;
    bad.C = qm({{"1"}});
    bad.D = qm({{"1"}});
    CHECK_THROWS_WITH_AS(construct_thm41(sys, FamilyCase::T41_i, bad),
                         "family T41-i: CD = 0 violated", std::invalid_argument);
}

TEST_CASE("T41-iii matches the worked 3x3 example's solution shape") {
    // n=3, r=2: X = [[Y1, C], [D, 0]] with Y1^2 = 0, CD = Y1, DC = 0
    auto sys = draws::canonical_pair(3, 2, 1);
    FamilyParams<Rational> p;
    p.V = Matrix<Rational>::identity(2, Rational(1));
    p.Z = qm({{"1"}, {"0"}});  // row 2 zero
    p.W = qm({{"0", "1"}});    // col 1 zero, Z W = J_2
    auto x = construct_thm41(sys, FamilyCase::T41_iii, p);
    CHECK(is_solution(sys, x));
    auto y1 = x.block(0, 0, 2, 2);
    auto c = x.block(0, 2, 2, 1);
    auto d = x.block(2, 0, 1, 2);
    CHECK((y1 * y1).is_zero());
    CHECK(c * d == y1);
    CHECK((d * c).is_zero());
    CHECK((y1 * c).is_zero());
    CHECK((d * y1).is_zero());
    CHECK(x.block(2, 2, 1, 1).is_zero());
}

TEST_CASE("degenerate ranks are not a canonical shape") {
    // r = n (A = I) leaves no room for B's unit block
    SystemInstance<Rational> full(Matrix<Rational>::identity(2, Rational(1)),
                                  Matrix<Rational>(2, 2));
    FamilyParams<Rational> p;
    p.C = Matrix<Rational>(1, 1);
    p.D = Matrix<Rational>(1, 1);
    CHECK_THROWS_AS(construct_thm41(full, FamilyCase::T41_i, p), std::invalid_argument);
    // r = 0 (A = 0) likewise
    SystemInstance<Rational> empty(Matrix<Rational>(2, 2),
                                   Matrix<Rational>::identity(2, Rational(1)));
    CHECK_THROWS_AS(construct_thm41(empty, FamilyCase::T41_i, p), std::invalid_argument);
}

TEST_CASE("T42 constraint violations are named") {
    auto sys = draws::canonical_pair(3, 1, 1);
    FamilyParams<Rational> p;
    p.C = qm({{"0", "1"}});
    p.D = qm({{"0"}, {"0"}});
    p.Y2 = qm({{"1", "0"}, {"0", "0"}});  // Y2 B' Y2 != 0
    CHECK_THROWS_WITH_AS(construct_thm42(sys, FamilyCase::T42_i, p),
                         "family T42-i: Y2B'Y2 = 0 violated", std::invalid_argument);
}

TEST_CASE("2x2 constructors reproduce the worked instances") {
    // diagonal pair, second diagonal index: b=c=d=1 gives X = diag(0, 1)
    FamilyParams<Rational> p52;
    p52.b = Rational(1);
    p52.c = Rational(1);
    p52.d = Rational(1);
    auto made = construct_2x2(FamilyCase::P52_i, p52);
    CHECK(made.sys.A == qdiag({0, 1}));
    CHECK(made.sys.B == qdiag({1, 1}));
    CHECK(made.X == qdiag({0, 1}));

    //双 Jordan blocks, a=1, b=-1, alpha=1: X = [[1,-2],[1,-1]]
    FamilyParams<Rational> p55;
    p55.a = Rational(1);
    p55.b = Rational(-1);
    p55.alpha = Rational(1);
    auto made55 = construct_2x2(FamilyCase::P55_ii, p55);
    CHECK(made55.X == qm({{"1", "-2"}, {"1", "-1"}}));
    CHECK(is_solution(made55.sys, made55.X));
    // trace a+b and corner -ab
    CHECK(made55.X(0, 0) + made55.X(1, 1) == Rational(0));
    CHECK(made55.X(1, 0) == Rational(1));

    // equal Jordan blocks, a=1, sqrt parameter 1: X = [[2,1],[-1,0]]
    FamilyParams<Rational> p55i;
    p55i.a = Rational(1);
    p55i.form = 1;
    p55i.sqrt_param = Rational(1);
    auto made55i = construct_2x2(FamilyCase::P55_i, p55i);
    CHECK(made55i.X == qm({{"2", "1"}, {"-1", "0"}}));
    CHECK(is_solution(made55i.sys, made55i.X));
}

TEST_CASE("trivial-only cases refuse nonzero requests") {
    FamilyParams<Rational> p;
    p.a = Rational(2);
    p.b = Rational(1);
    p.c = Rational(1);
    p.alpha = Rational(1);
    CHECK_THROWS_AS(construct_2x2(FamilyCase::P54_b, p), std::invalid_argument);
    p.alpha = Rational(0);
    CHECK(construct_2x2(FamilyCase::P54_b, p).X.is_zero());

    FamilyParams<Rational> q;
    q.a = Rational(3);
    q.beta = Rational(1);
    CHECK_THROWS_AS(construct_2x2(FamilyCase::P55_iii, q), std::invalid_argument);
    q.beta = Rational(0);
    CHECK(construct_2x2(FamilyCase::P55_iii, q).X.is_zero());
}

TEST_CASE("side-condition violations are rejected") {
    FamilyParams<Rational> p;
    p.a = Rational(1);
    p.b = Rational(1);
    p.c = Rational(1);
    p.d = Rational(2);  // b^3 != d^3
    CHECK_THROWS_AS(construct_2x2(FamilyCase::P51_i, p), std::invalid_argument);
    p.d = Rational(1);
    p.c = Rational(2);
    p.alpha = Rational(1);  // needs c d^2 = b^3
    CHECK_THROWS_AS(construct_2x2(FamilyCase::P51_i, p), std::invalid_argument);
    p.alpha = Rational(0);  // without alpha the pair is fine
    CHECK(construct_2x2(FamilyCase::P51_i, p).X == qdiag({0, 1}));
}

TEST_CASE("every draw passes residual verification and classifies back") {
    std::mt19937_64 rng(2024);
    for (FamilyCase tag : draws::constructor_cases()) {
        for (int round = 0; round < 12; ++round) {
            auto drawn = draws::draw_family(tag, rng);
            CHECK(is_solution(drawn.sys, drawn.X));
            auto cls = family_covers(drawn.sys, drawn.X);
            REQUIRE(cls.has_value());
            if (drawn.X.is_zero()) {
                CHECK(cls->tag == FamilyCase::Trivial);
            } else if ((drawn.tag == FamilyCase::P51_ii || drawn.tag == FamilyCase::P51_iii) &&
                       is_zero(drawn.X(0, 1)) && is_zero(drawn.X(1, 0))) {
                // the alpha = 0 instances of these two cases coincide on the
                // diagonal form, either tag is a correct classification
                CHECK((cls->tag == FamilyCase::P51_ii || cls->tag == FamilyCase::P51_iii));
            } else {
                CHECK(std::string(family_tag(cls->tag)) == family_tag(drawn.tag));
            }
        }
    }
}

TEST_CASE("perturbing a constraint input is rejected and breaks the residual") {
    std::mt19937_64 rng(99);
    auto drawn = draws::draw_family(FamilyCase::T41_ii, rng);
    const std::size_t n = drawn.sys.n();
    // force-assemble with a corrupted corner of the Y2 block
    Matrix<Rational> forced = drawn.X;
    forced(n - 1, n - 1) += Rational(1);
    CHECK(!is_solution(drawn.sys, forced));

    // and the constructor itself refuses perturbed parameters: WZ != J
    FamilyParams<Rational> p;
    p.U = Matrix<Rational>::identity(n - 1, Rational(1));
    Matrix<Rational> z(1, n - 1), w(n - 1, 1);
    z(0, 1) = Rational(1);
    w(0, 0) = Rational(2);  // WZ = 2J, not J
    p.Z = z;
    p.W = w;
    auto sys = draws::canonical_pair(n, 1, n - 1);
    CHECK_THROWS_AS(construct_thm41(sys, FamilyCase::T41_ii, p), std::invalid_argument);
}

TEST_CASE("classification of canonical 2x2 shapes") {
    // trivial
    SystemInstance<Rational> sys(qdiag({1, 0}), qdiag({0, 1}));
    auto cls0 = family_covers(sys, Matrix<Rational>(2, 2));
    REQUIRE(cls0.has_value());
    CHECK(cls0->tag == FamilyCase::Trivial);

    // T41-i with C = (1), D = (0)
    auto cls1 = family_covers(sys, qm({{"0", "1"}, {"0", "0"}}));
    REQUIRE(cls1.has_value());
    CHECK(cls1->tag == FamilyCase::T41_i);
    CHECK(cls1->details.text("C") == "[[1]]");
    CHECK(cls1->details.text("D") == "[[0]]");

    // a solution of the swapped orientation still classifies
    SystemInstance<Rational> swapped(qdiag({0, 1}), qdiag({1, 0}));
    auto cls2 = family_covers(swapped, qm({{"0", "1"}, {"0", "0"}}));
    REQUIRE(cls2.has_value());
    CHECK(cls2->tag == FamilyCase::T41_i);

    // non-solution classifies as nothing
    CHECK(!family_covers(sys, Matrix<Rational>::identity(2, Rational(1))).has_value());

    // P51-v: nonsingular solution of a nonsingular diagonal pair
    SystemInstance<Rational> diag_pair(qdiag({1, 1}), qdiag({1, 1}));
    auto id = Matrix<Rational>::identity(2, Rational(1));
    auto cls3 = family_covers(diag_pair, id);
    REQUIRE(cls3.has_value());
    // X = I = diag(a^2/c, b^2/d) matches the closed diagonal form first
    CHECK((cls3->tag == FamilyCase::P51_ii || cls3->tag == FamilyCase::P51_iii));
}

TEST_CASE("prime-field construction reaches branches empty over the rationals") {
    // over F7 the cross conditions ab = a^2 + b^2 and cd = c^2 + d^2 have
    // solutions (a/b a primitive sixth root of unity), so the alpha != 0 form
    // of the mixed diagonal case exists: a = 3, b = 1, c = 3, d = 1
    FamilyParams<Fp> p;
    p.a = Fp(3, 7);
    p.b = Fp(1, 7);
    p.c = Fp(3, 7);
    p.d = Fp(1, 7);
    p.alpha = Fp(4, 7);
    auto made = construct_2x2(FamilyCase::P51_ii, p);
    CHECK(is_solution(made.sys, made.X));
    CHECK(made.X(1, 0) == Fp(4, 7));
    CHECK(!made.X(0, 0).is_zero());

    auto cls = family_covers(made.sys, made.X);
    REQUIRE(cls.has_value());
    CHECK(cls->tag == FamilyCase::P51_ii);
}

TEST_CASE("T42-ii worked shape: n=4, r=2, s=1 with trace-zero upper block") {
    auto sys = draws::canonical_pair(4, 2, 1);
    FamilyParams<Rational> p;
    p.U = qm({{"1", "2"}, {"1", "3"}});
    // Z row 2 zero, W column 1 zero, Z B' W = J via z w = 1
    p.C = *p.U * qm({{"3", "5"}, {"0", "0"}});
    p.D = qm({{"0", "1/3"}, {"0", "7"}}) * inverse(*p.U);
    Matrix<Rational> y2(2, 2);
    y2(1, 1) = Rational(4);  // Y2 = [[0, l], [p, q]] with l = p = 0, q = 4
    p.Y2 = y2;
    auto x = construct_thm42(sys, FamilyCase::T42_ii, p);
    CHECK(is_solution(sys, x));
    auto y1 = x.block(0, 0, 2, 2);
    CHECK(!y1.is_zero());
    CHECK((y1 * y1).is_zero());
    CHECK(y1(0, 0) + y1(1, 1) == Rational(0));  // a = -f
    auto cls = family_covers(sys, x);
    REQUIRE(cls.has_value());
    CHECK(cls->tag == FamilyCase::T42_ii);
}

TEST_CASE("similarity witness for rank-one square-zero blocks") {
    // Y = [[2,4],[-1,-2]] squares to zero and has rank one
    auto y = qm({{"2", "4"}, {"-1", "-2"}});
    auto u = famdetail::similarity_to_j(y);
    REQUIRE(u.has_value());
    Matrix<Rational> j(2, 2);
    j(0, 1) = Rational(1);
    CHECK(*u * j * inverse(*u) == y);
    // rank-two square-zero block has no such witness
    Matrix<Rational> two(4, 4);
    two(0, 2) = Rational(1);
    two(1, 3) = Rational(1);
    CHECK(!famdetail::similarity_to_j(two).has_value());
}
