#include "ybx/canonical.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace ybx;
using fix::fpm;
using fix::qdiag;
using fix::qm;

TEST_CASE("the 3x3 example pair diagonalizes to diag(1,1,0), diag(0,0,1)") {
    SystemInstance<Rational> sys(fix::ex41_A(), fix::ex41_B());
    REQUIRE(is_idempotent_pair(sys));
    auto pair = simultaneous_diagonalize(sys);
    CHECK(pair.r == 2);
    CHECK(pair.s == 1);
    CHECK(pair.JA == qdiag({1, 1, 0}));
    CHECK(pair.JB == qdiag({0, 0, 1}));
    CHECK(pair.Smat * sys.A * pair.Sinv == pair.JA);
    CHECK(pair.Smat * sys.B * pair.Sinv == pair.JB);

    // conjugation carries solutions both ways
    Matrix<Rational> y(3, 3);
    y(0, 2) = Rational(1);  // a case-i solution of the canonical pair
    SystemInstance<Rational> canon(pair.JA, pair.JB);
    REQUIRE(is_solution(canon, y));
    auto x = pull_back(pair, y);
    CHECK(is_solution(sys, x));
    CHECK(push_through(pair, x) == y);
}

TEST_CASE("block-form solutions pull back to the printed 3x3 pair") {
    // construct a [[Y1, C], [D, 0]] solution of the canonical pair and carry
    // it to the original coefficients through the published diagonalizer
    SystemInstance<Rational> canon(qdiag({1, 1, 0}), qdiag({0, 0, 1}));
    Matrix<Rational> y(3, 3);
    y(0, 2) = Rational(3);   // C = (3, 0)^T
    y(2, 0) = Rational(0);   // D = (0, 2)
    y(2, 1) = Rational(2);
    y(0, 0) = Rational(0);   // Y1 = C D = [[0, 6], [0, 0]]
    y(0, 1) = Rational(6);
    REQUIRE(is_solution(canon, y));
    auto u = fix::ex41_U();
    auto x = fix::ex41_Uinv() * y * u;  // X = U^-1 Y U
    SystemInstance<Rational> original(fix::ex41_A(), fix::ex41_B());
    CHECK(is_solution(original, x));
    CHECK(!x.is_zero());
}

TEST_CASE("the 4x4 example pair diagonalizes to diag(1,1,0,0) and E33") {
    SystemInstance<Rational> sys(fix::ex42_A(), fix::ex42_B());
    REQUIRE(is_idempotent_pair(sys));
    auto pair = simultaneous_diagonalize(sys);
    CHECK(pair.r == 2);
    CHECK(pair.s == 1);
    CHECK(pair.JA == qdiag({1, 1, 0, 0}));
    CHECK(pair.JB == qdiag({0, 0, 1, 0}));
}

TEST_CASE("already-diagonal pair keeps its form") {
    SystemInstance<Rational> sys(qdiag({1, 0}), qdiag({0, 1}));
    auto pair = simultaneous_diagonalize(sys);
    CHECK(pair.JA == sys.A);
    CHECK(pair.JB == sys.B);
    CHECK(pair.Smat == Matrix<Rational>::identity(2, Rational(1)));
}

TEST_CASE("non-idempotent input is rejected") {
    SystemInstance<Rational> notidem(qdiag({2, 0}), qdiag({0, 1}));
    CHECK_THROWS_AS(simultaneous_diagonalize(notidem), std::invalid_argument);
    SystemInstance<Rational> notorth(qdiag({1, 1}), qdiag({1, 0}));
    CHECK_THROWS_AS(simultaneous_diagonalize(notorth), std::invalid_argument);
}

TEST_CASE("prime-field idempotent pairs diagonalize too") {
    // conjugate the canonical F5 pair by an invertible matrix and recover it
    auto g = fpm(5, {{1, 2}, {1, 3}});
    auto ginv = inverse(g);
    auto a = ginv * fpm(5, {{1, 0}, {0, 0}}) * g;
    auto b = ginv * fpm(5, {{0, 0}, {0, 1}}) * g;
    SystemInstance<Fp> sys(a, b);
    REQUIRE(is_idempotent_pair(sys));
    auto pair = simultaneous_diagonalize(sys);
    CHECK(pair.JA == fpm(5, {{1, 0}, {0, 0}}));
    CHECK(pair.JB == fpm(5, {{0, 0}, {0, 1}}));
}

TEST_CASE("random conjugated idempotent pairs over the rationals") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> ent(-3, 3);
    for (int round = 0; round < 10; ++round) {
        std::size_t n = 3 + round % 3;
        std::uniform_int_distribution<std::size_t> rd(1, n - 1);
        std::size_t r = rd(rng);
        std::uniform_int_distribution<std::size_t> sd(1, n - r);
        std::size_t s = sd(rng);
        Matrix<Rational> ja(n, n), jb(n, n);
        for (std::size_t i = 0; i < r; ++i) ja(i, i) = Rational(1);
        for (std::size_t i = 0; i < s; ++i) jb(r + i, r + i) = Rational(1);
        Matrix<Rational> g(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(ent(rng));
        } while (det(g).is_zero());
        Matrix<Rational> ginv = inverse(g);
        SystemInstance<Rational> sys(ginv * ja * g, ginv * jb * g);
        REQUIRE(is_idempotent_pair(sys));
        auto pair = simultaneous_diagonalize(sys);
        CHECK(pair.r == r);
        CHECK(pair.s == s);
        CHECK(pair.JA == ja);
        CHECK(pair.JB == jb);
        CHECK(pair.Smat * sys.A * pair.Sinv == ja);
        CHECK(pair.Smat * sys.B * pair.Sinv == jb);
    }
}

#include "ybx/oracle.hpp"

TEST_CASE("solution sets of conjugated pairs are carried bijectively") {
    // enumerate both the canonical F5 pair and a conjugate of it; pushing
    // through the diagonalizer must give exactly the canonical solutions
    auto ja = fpm(5, {{1, 0}, {0, 0}});
    auto jb = fpm(5, {{0, 0}, {0, 1}});
    auto g = fpm(5, {{2, 1}, {1, 1}});
    auto ginv = inverse(g);
    SystemInstance<Fp> conj(ginv * ja * g, ginv * jb * g);
    REQUIRE(is_idempotent_pair(conj));

    auto canon_rep = enumerate_solutions(ja, jb);
    auto conj_rep = enumerate_solutions(conj.A, conj.B);
    REQUIRE(canon_rep.solution_count == conj_rep.solution_count);

    auto pair = simultaneous_diagonalize(conj);
    std::vector<Matrix<Fp>> pushed;
    for (const auto& x : conj_rep.solutions) pushed.push_back(push_through(pair, x));
    for (const auto& y : pushed) {
        bool found = false;
        for (const auto& z : canon_rep.solutions) found = found || y == z;
        CHECK(found);
    }
}
