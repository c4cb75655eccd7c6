#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ears/finroots.hpp"

using namespace ears;

namespace {

QVec qv(std::initializer_list<long long> xs) {
    QVec v;
    for (long long x : xs) v.push_back(Rational(x));
    return v;
}

size_t classical_count(char t, int l) {
    switch (t) {
    case 'A': return static_cast<size_t>(l) * (l + 1);
    case 'B':
    case 'C': return 2 * static_cast<size_t>(l) * l;
    case 'D': return 2 * static_cast<size_t>(l) * (l - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return l == 6 ? 72 : (l == 7 ? 126 : 240);
    }
    return 0;
}

} // namespace

TEST_CASE("root counts match the classical formulas") {
    const std::vector<std::pair<char, int>> pairs = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
        {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4},
        {'E', 6}, {'E', 7}, {'E', 8}};
    for (auto [t, l] : pairs) {
        auto r = build_finite(t, l);
        CHECK(r.roots().size() == classical_count(t, l));
        CHECK(r.positive_roots().size() * 2 == r.roots().size());
        CHECK(r.base().size() == static_cast<size_t>(l));
        // closed under negation, reduced
        for (const auto& root : r.roots()) {
            CHECK(r.is_root(qvec_neg(root)));
            CHECK(!r.is_root(qvec_scale(Rational(2), root)));
        }
        // short roots have squared length 2 under the scaled form
        for (const auto& s : r.short_roots()) CHECK(r.form(s, s) == Rational(2));
    }
    CHECK_THROWS_AS(build_finite('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(build_finite('C', 2), std::invalid_argument);
    CHECK_THROWS_AS(build_finite('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(build_finite('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(build_finite('X', 2), std::invalid_argument);
}

TEST_CASE("B2 short and long roots") {
    auto b2 = build_finite('B', 2);
    CHECK(b2.short_roots().size() == 4);   // +-e1, +-e2
    CHECK(b2.long_roots().size() == 4);    // +-e1 +- e2
    CHECK(b2.is_short(qv({1, 0})));
    CHECK(b2.is_long(qv({1, 1})));
    CHECK(b2.is_long(qv({1, -1})));
    // scaled form: short length 2, long length 4
    CHECK(b2.form(qv({1, 0}), qv({1, 0})) == Rational(2));
    CHECK(b2.form(qv({1, 1}), qv({1, 1})) == Rational(4));
}

TEST_CASE("A1 and simply laced systems have no long roots") {
    auto a1 = build_finite('A', 1);
    CHECK(a1.roots().size() == 2);
    CHECK(a1.simply_laced());
    CHECK(build_finite('D', 4).simply_laced());
    CHECK(build_finite('E', 6).simply_laced());
    CHECK(!build_finite('G', 2).simply_laced());
}

TEST_CASE("coroots") {
    auto b2 = build_finite('B', 2);
    CHECK(b2.coroot(qv({1, 0})) == qv({1, 0}));                      // short: (a,a)=2
    CHECK(b2.coroot(qv({1, 1})) ==
          QVec{Rational(1, 2), Rational(1, 2)});                     // long: (b,b)=4

    auto g2 = build_finite('G', 2);
    QVec beta = qv({2, -1, -1});                                     // long, (b,b)=6
    CHECK(g2.form(beta, beta) == Rational(6));
    CHECK(g2.coroot(beta) ==
          QVec{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
    CHECK_THROWS_AS(g2.coroot(qv({0, 0, 0})), std::domain_error);
}

TEST_CASE("root strings: fixed examples") {
    auto a2 = build_finite('A', 2);
    // alpha = e2 - e3, beta = e1 - e2: string beta, beta + alpha
    auto s = root_string(a2, qv({0, 1, -1}), qv({1, -1, 0}));
    CHECK(s.down == 0);
    CHECK(s.up == 1);
    CHECK(s.pairing == Rational(-1));

    // beta = alpha: string alpha, 0, -alpha inside R union {0}
    auto s2 = root_string(a2, qv({1, -1, 0}), qv({1, -1, 0}));
    CHECK(s2.down == 2);
    CHECK(s2.up == 0);
    CHECK(s2.pairing == Rational(2));

    // B2, alpha = e2 short, beta = e1 - e2: string of length 3 upward
    auto b2 = build_finite('B', 2);
    auto s3 = root_string(b2, qv({0, 1}), qv({1, -1}));
    CHECK(s3.down == 0);
    CHECK(s3.up == 2);
    CHECK(s3.pairing == Rational(-2));
}

TEST_CASE("root string law holds exhaustively up to rank 4") {
    const std::vector<std::pair<char, int>> pairs = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
        {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
    for (auto [t, l] : pairs) {
        auto r = build_finite(t, l);
        for (const auto& alpha : r.roots())
            for (const auto& beta : r.roots())
                CHECK_NOTHROW(root_string(r, alpha, beta));   // throws if d-u law fails
    }
}

TEST_CASE("triality of D4") {
    auto d4 = build_finite('D', 4);
    auto s = diagram_automorphism(d4, 3);
    // a1 -> a3 -> a4 -> a1, a2 fixed
    QVec a1 = qv({1, -1, 0, 0}), a2 = qv({0, 1, -1, 0}), a3 = qv({0, 0, 1, -1}),
         a4 = qv({0, 0, 1, 1});
    CHECK(s.apply(a1) == a3);
    CHECK(s.apply(a3) == a4);
    CHECK(s.apply(a4) == a1);
    CHECK(s.apply(a2) == a2);
    CHECK(s.apply_pow(a1, 3) == a1);
    // fixed points among positive roots: e1+e2, e1+e3, e2-e3
    CHECK(s.apply(qv({1, 1, 0, 0})) == qv({1, 1, 0, 0}));
    CHECK(s.apply(qv({1, 0, 1, 0})) == qv({1, 0, 1, 0}));
}

TEST_CASE("order-2 diagram automorphisms") {
    auto a3 = build_finite('A', 3);
    auto f = diagram_automorphism(a3, 2);
    QVec a1 = qv({1, -1, 0, 0}), a2 = qv({0, 1, -1, 0}), a3v = qv({0, 0, 1, -1});
    CHECK(f.apply(a1) == a3v);
    CHECK(f.apply(a3v) == a1);
    CHECK(f.apply(a2) == a2);

    auto d5 = build_finite('D', 5);
    auto g = diagram_automorphism(d5, 2);
    CHECK(g.apply(d5.base()[3]) == d5.base()[4]);
    CHECK(g.apply(d5.base()[4]) == d5.base()[3]);

    auto e6 = build_finite('E', 6);
    CHECK_NOTHROW(diagram_automorphism(e6, 2));

    // identity always admissible
    auto id = diagram_automorphism(a3, 1);
    for (const auto& r : a3.roots()) CHECK(id.apply(r) == r);

    CHECK_THROWS_AS(diagram_automorphism(build_finite('B', 3), 2), std::invalid_argument);
    CHECK_THROWS_AS(diagram_automorphism(build_finite('A', 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(diagram_automorphism(build_finite('D', 5), 3), std::invalid_argument);
    CHECK_THROWS_AS(diagram_automorphism(build_finite('A', 2), 4), std::invalid_argument);
}

TEST_CASE("diagram automorphisms preserve the form exactly") {
    for (auto [t, l, m] : std::vector<std::tuple<char, int, int>>{
             {'A', 3, 2}, {'A', 4, 2}, {'D', 4, 3}, {'D', 4, 2}, {'E', 6, 2}}) {
        auto r = build_finite(t, l);
        auto s = diagram_automorphism(r, m);
        for (const auto& a : r.roots())
            for (const auto& b : r.roots())
                CHECK(r.form(s.apply(a), s.apply(b)) == r.form(a, b));
        // sigma permutes short and long roots separately
        for (const auto& a : r.short_roots()) CHECK(r.is_short(s.apply(a)));
        for (const auto& a : r.long_roots()) CHECK(r.is_long(s.apply(a)));
    }
}
