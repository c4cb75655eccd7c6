#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ears/lattice.hpp"

#include <algorithm>
#include <random>

using namespace ears;

namespace {

Semilattice semilattice(size_t dim, std::vector<std::vector<long long>> reps) {
    std::vector<IVec> r;
    for (auto& v : reps) {
        IVec iv;
        for (long long x : v) iv.push_back(Int(x));
        r.push_back(iv);
    }
    return Semilattice(Lattice::standard(dim), r);
}

IVec iv(std::initializer_list<long long> xs) { return ivec_of(xs); }

} // namespace

TEST_CASE("hnf canonical form and membership") {
    // {(2,0),(0,2),(1,1)} spans the index-2 sublattice containing (1,1)
    Subgroup g = subgroup_span(2, {iv({2, 0}), iv({0, 2}), iv({1, 1})});
    CHECK(g.rank() == 2);
    CHECK(g.basis() == IMat{iv({1, 1}), iv({0, 2})});
    CHECK(g.contains(iv({1, 1})));
    CHECK(g.contains(iv({3, -1})));
    CHECK(!g.contains(iv({1, 0})));

    // order independence of the canonical basis
    std::vector<IVec> gens = {iv({2, 0}), iv({0, 2}), iv({1, 1})};
    std::sort(gens.begin(), gens.end());
    do {
        CHECK(subgroup_span(2, gens) == g);
    } while (std::next_permutation(gens.begin(), gens.end()));

    // empty span, full span
    CHECK(subgroup_span(2, {}).rank() == 0);
    CHECK(subgroup_span(2, {iv({1, 0}), iv({0, 1})}).contains(iv({-7, 12})));
}

TEST_CASE("hnf randomized span invariance") {
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        size_t dim = 3;
        IMat rows(3, IVec(dim));
        for (auto& r : rows)
            for (auto& x : r) x = e(gen);
        Subgroup g(dim, rows);
        // adding a random integer combination of generators never changes the span
        IVec combo(dim, Int(0));
        for (const auto& r : rows) combo = add(combo, scale(Int(e(gen)), r));
        IMat rows2 = rows;
        rows2.push_back(combo);
        CHECK(Subgroup(dim, rows2) == g);
    }
}

TEST_CASE("semilattice validate") {
    CHECK(semilattice(2, {{0, 0}, {1, 0}, {0, 1}}).validate().empty());

    // (3,0) duplicates (1,0) mod 2L; the two cosets then fail to span as well
    auto dup = semilattice(2, {{0, 0}, {1, 0}, {3, 0}}).validate();
    REQUIRE(!dup.empty());
    CHECK(dup[0].find("(3,0)") != std::string::npos);
    CHECK(dup[0].find("duplicates") != std::string::npos);

    // (2,0) duplicates the zero coset and the span misses (1,0), (0,1)
    auto bad = semilattice(2, {{0, 0}, {2, 0}}).validate();
    CHECK(bad.size() == 2);

    CHECK(!semilattice(2, {{1, 0}, {0, 1}}).is_valid());   // zero coset missing
    CHECK(Semilattice::two_standard(3).is_valid());
}

TEST_CASE("semilattice membership and index") {
    auto s = semilattice(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(s.index() == 2);
    CHECK(s.contains(iv({1, 0})));
    CHECK(s.contains(iv({-1, 2})));
    CHECK(s.contains(iv({0, 0})));
    CHECK(!s.contains(iv({1, 1})));

    CHECK(semilattice(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}).index() == 3);
    CHECK(Semilattice::standard(1).index() == 1);     // S = Z: cosets 0 and 1
    CHECK(Semilattice::standard(2).index() == 3);     // all four cosets

    // membership is symmetric and 2L-periodic
    std::mt19937 gen(55);
    std::uniform_int_distribution<long long> e(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IVec v = iv({e(gen), e(gen)});
        CHECK(s.contains(v) == s.contains(neg(v)));
        IVec shift = iv({2 * e(gen), 2 * e(gen)});
        CHECK(s.contains(v) == s.contains(add(v, shift)));
    }
}

TEST_CASE("semilattice with sublattice ambient") {
    // L = 2Z^2 expressed in its own ambient
    auto l = Semilattice::two_standard(2);
    CHECK(l.contains(iv({2, 0})));
    CHECK(l.contains(iv({-4, 6})));
    CHECK(!l.contains(iv({1, 0})));
    CHECK(!l.contains(iv({2, 1})));
    CHECK(l.is_valid());
}

TEST_CASE("interaction check") {
    auto s = semilattice(2, {{0, 0}, {1, 0}, {0, 1}});
    auto l = Semilattice::two_standard(2);
    CHECK(interaction_check(s, l).empty());

    auto lam = Semilattice::standard(2);
    CHECK(interaction_check(lam, lam).empty());

    // L = Lambda forces (1,1) = (0,1) + (1,0) into S, which fails
    auto bad = interaction_check(s, lam);
    CHECK(!bad.empty());
}

TEST_CASE("sumset cosets") {
    auto s = semilattice(2, {{0, 0}, {1, 0}, {0, 1}});
    auto ss = sumset_cosets(s, s);
    CHECK(ss.coset_count() == 4);   // S + S covers every coset: the full lattice
    CHECK(ss.contains(iv({1, 1})));

    // 2Z^2 is the zero coset of the standard ambient: (2Z^2) + (2Z^2) = 2Z^2
    CosetSet two_lambda(Lattice::standard(2), {iv({0, 0})});
    CHECK(sumset_cosets(two_lambda, two_lambda) == two_lambda);

    // S + 2Lambda = S
    CHECK(sumset_cosets(s.to_coset_set(), two_lambda) == s.to_coset_set());
}

TEST_CASE("sumset commutative and associative") {
    std::mt19937 gen(31);
    std::uniform_int_distribution<long long> e(0, 1);
    auto rand_cs = [&] {
        std::vector<IVec> reps{iv({0, 0, 0})};
        for (int i = 0; i < 3; ++i) reps.push_back(iv({e(gen), e(gen), e(gen)}));
        return CosetSet(Lattice::standard(3), reps);
    };
    for (int trial = 0; trial < 50; ++trial) {
        CosetSet a = rand_cs(), b = rand_cs(), c = rand_cs();
        CHECK(sumset_cosets(a, b) == sumset_cosets(b, a));
        CHECK(sumset_cosets(sumset_cosets(a, b), c) == sumset_cosets(a, sumset_cosets(b, c)));
    }
}

TEST_CASE("S + 2<S> = S for valid semilattices") {
    auto check_stable = [](const Semilattice& s) {
        auto span = s.span();
        for (const auto& g : span.basis())
            for (const auto& tau : s.reps_global())
                CHECK(s.contains(add(scale(Int(2), g), tau)));
    };
    check_stable(semilattice(2, {{0, 0}, {1, 0}, {0, 1}}));
    check_stable(semilattice(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    check_stable(Semilattice::two_standard(2));
}

TEST_CASE("quotient representatives") {
    // Z^2 / 2Z^2 has four classes
    IMat n = hnf({iv({1, 0}), iv({0, 1})});
    IMat m = hnf({iv({2, 0}), iv({0, 2})});
    auto reps = quotient_reps(n, m, 2);
    CHECK(reps.size() == 4);

    // index-2 sublattice
    IMat d = hnf({iv({1, 1}), iv({0, 2})});
    CHECK(quotient_reps(n, d, 2).size() == 2);
}
