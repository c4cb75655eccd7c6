#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ears/cyclotomic.hpp"
#include "ears/exact_matrix.hpp"
#include "ears/laurent.hpp"
#include "ears/rational.hpp"

#include "oracles.hpp"

#include <random>

using namespace ears;

namespace {

ExactMatrix<Rational> to_matrix(const std::vector<std::vector<Rational>>& rows) {
    return ExactMatrix<Rational>::from_rows(rows);
}

} // namespace

TEST_CASE("rational basics") {
    Rational a(1, 2), b(3, 4);
    CHECK(a + b == Rational(5, 4));
    CHECK(a * b == Rational(3, 8));
    CHECK((a / b) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("cyclotomic arithmetic, m = 3") {
    // (1 + w)(1 + w^2) = 1: expand and use w^3 = 1, 1 + w + w^2 = 0
    Cyc one_plus_w = Cyc(3, Rational(1)) + Cyc::omega(3);
    Cyc one_plus_w2 = Cyc(3, Rational(1)) + Cyc::omega_pow(3, 2);
    CHECK(one_plus_w * one_plus_w2 == Cyc(3, Rational(1)));

    Cyc w = Cyc::omega(3);
    CHECK(w * w * w == Cyc(3, Rational(1)));

    // conjugation: w -> w^2, 1 + w -> -w
    CHECK(w.conjugate() == Cyc::omega_pow(3, 2));
    CHECK(one_plus_w.conjugate() == -w);
    CHECK(one_plus_w.conjugate().conjugate() == one_plus_w);
}

TEST_CASE("cyclotomic arithmetic, m = 2") {
    Cyc w = Cyc::omega(2);
    Cyc half(2, Rational(1, 2));
    // (1/2)(1 - w) + (1/2)(1 + w) = 1
    Cyc one(2, Rational(1));
    CHECK(half * (one - w) + half * (one + w) == one);
    // m = 2 is real: conjugation is the identity
    Cyc x(2, Rational(-7, 3));
    CHECK(x.conjugate() == x);
}

TEST_CASE("cyclotomic field axioms on random elements") {
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto rand_cyc = [&](int m) {
        std::vector<Rational> c(m <= 2 ? 1 : m - 1);
        for (auto& x : c) x = Rational(coef(gen), 1 + std::abs(coef(gen)));
        return Cyc(m, c);
    };
    for (int m : {2, 3, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            Cyc a = rand_cyc(m), b = rand_cyc(m), c = rand_cyc(m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(m, Rational(1)));
        }
    }
}

TEST_CASE("norm positivity in Q(zeta_3)") {
    std::mt19937 gen(999);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Cyc a(3, {Rational(coef(gen)), Rational(coef(gen))});
        Cyc n = a * a.conjugate();
        REQUIRE(n.is_rational());
        CHECK(n.rational_value() >= Rational(0));
        CHECK((n.rational_value().is_zero() == a.is_zero()));
    }
}

TEST_CASE("laurent polynomial ring") {
    using LP = LaurentPoly;
    auto t = [&](long long a, long long b) { return LP::monomial({a, b}, Rational(1)); };
    CHECK(t(1, 0) * t(-1, 2) == t(0, 2));
    CHECK((t(1, 0) + t(0, 1)) * t(0, -1) == t(1, -1) + LP::constant(2, Rational(1)));
    CHECK((t(1, 0) * LP(2)).is_zero());
    CHECK_THROWS(t(1, 0) * LP::monomial({1, 2, 3}, Rational(1)));

    // exact division round trip
    LP p = t(2, -1) + Rational(3) * t(0, 1) - t(-1, 0);
    LP q = t(1, 1) - Rational(2) * t(0, 0);
    CHECK((p * q).divide_exact(q) == p);
    CHECK((p * q).divide_exact(p) == q);

    CHECK(p.str() == "t1^2*t2^-1 + 3*t2 - t1^-1");
}

TEST_CASE("exact rank: fixed examples") {
    std::vector<std::vector<Rational>> id3 = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(exact_rank(to_matrix(id3)) == 3);

    // two equal projection vectors span one line
    std::vector<Rational> pi1 = {Rational(1, 3), Rational(-1, 3), Rational(-1, 3), Rational(0)};
    CHECK(exact_rank(to_matrix({pi1, pi1})) == 1);

    // pi(a1) and pi(a1) + a2 in epsilon coordinates: hand elimination gives 2
    std::vector<Rational> pa = {Rational(1, 3), Rational(-1, 3), Rational(2, 3), Rational(0)};
    std::vector<Rational> pb = {Rational(1, 3), Rational(2, 3), Rational(-1, 3), Rational(0)};
    CHECK(exact_rank(to_matrix({pa, pb})) == 2);

    CHECK(exact_rank(ExactMatrix<Rational>(0, 0)) == 0);
    CHECK(exact_rank(to_matrix({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("exact rank agrees with minor expansion oracle") {
    // exhaustive 2x2 over {-2..2}
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    std::vector<std::vector<Rational>> m = {{a, b}, {c, d}};
                    CHECK(exact_rank(to_matrix(m)) == oracles::minor_rank(m));
                }
    // exhaustive 3x3 over {-1, 0, 1}
    for (int mask = 0; mask < 19683; ++mask) {
        int x = mask;
        std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
        for (int i = 0; i < 9; ++i) {
            m[i / 3][i % 3] = Rational(x % 3 - 1);
            x /= 3;
        }
        CHECK(exact_rank(to_matrix(m)) == oracles::minor_rank(m));
    }
    // random rectangular and 4x4 over {-2..2}
    std::mt19937 gen(777);
    std::uniform_int_distribution<int> e(-2, 2);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 3000; ++trial) {
        size_t rows = dim(gen), cols = dim(gen);
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& row : m)
            for (auto& x : row) x = Rational(e(gen));
        CHECK(exact_rank(to_matrix(m)) == oracles::minor_rank(m));
    }
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937 gen(4242);
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = dim(gen), cols = dim(gen);
        ExactMatrix<Rational> m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(e(gen), 1 + (trial % 3));
        CHECK(m.rank() == m.transposed().rank());
    }
}

TEST_CASE("rank over cyclotomic and laurent scalars") {
    Cyc w = Cyc::omega(3), one(3, Rational(1));
    ExactMatrix<Cyc> m(2, 2, Cyc(3));
    m.at(0, 0) = one;
    m.at(0, 1) = w;
    m.at(1, 0) = w.conjugate();          // w^2
    m.at(1, 1) = one;                    // det = 1 - w^3 = 0
    CHECK(m.rank() == 1);
    m.at(1, 1) = w;
    CHECK(m.rank() == 2);

    using LP = LaurentPoly;
    auto t1 = LP::monomial({1, 0}, Rational(1));
    auto t2 = LP::monomial({0, 1}, Rational(1));
    ExactMatrix<LP> p(2, 2, LP(2));
    p.at(0, 0) = t1;
    p.at(0, 1) = t2;
    p.at(1, 0) = t1 * t1;
    p.at(1, 1) = t1 * t2;                // second row = t1 * first row
    CHECK(p.rank() == 1);
    p.at(1, 1) = t2 * t2;
    CHECK(p.rank() == 2);
}
