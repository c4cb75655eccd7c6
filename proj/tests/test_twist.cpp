#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ears/twist.hpp"

#include <algorithm>
#include <set>

using namespace ears;

namespace {

QVec qv(std::initializer_list<long long> xs) {
    QVec v;
    for (long long x : xs) v.push_back(Rational(x));
    return v;
}

std::set<std::set<QVec>> orbit_family(const OrbitTable& t) {
    std::set<std::set<QVec>> out;
    for (const auto& o : t.orbits) out.insert(std::set<QVec>(o.begin(), o.end()));
    return out;
}

} // namespace

TEST_CASE("triality orbits on the positive roots of D4") {
    auto t = TwistDatum::build('D', 4, 3);
    auto table = orbits(t);
    REQUIRE(table.orbits.size() == 6);

    std::set<std::set<QVec>> expected = {
        {qv({1, -1, 0, 0}), qv({0, 0, 1, -1}), qv({0, 0, 1, 1})},
        {qv({1, 0, -1, 0}), qv({0, 1, 0, -1}), qv({0, 1, 0, 1})},
        {qv({1, 0, 0, -1}), qv({1, 0, 0, 1}), qv({0, 1, 1, 0})},
        {qv({1, 1, 0, 0})},
        {qv({1, 0, 1, 0})},
        {qv({0, 1, -1, 0})}};
    CHECK(orbit_family(table) == expected);

    // deterministic representatives: the alpha_1-most elements
    CHECK(table.representatives[0] == qv({1, -1, 0, 0}));   // a1
    CHECK(table.representatives[1] == qv({1, 0, -1, 0}));   // a1 + a2
    CHECK(table.representatives[2] == qv({1, 0, 0, -1}));   // a1 + a2 + a3
}

TEST_CASE("identity automorphism: singleton orbits") {
    auto t = TwistDatum::build('A', 2, 1);
    auto table = orbits(t);
    CHECK(table.orbits.size() == t.finite().positive_roots().size());
    for (const auto& o : table.orbits) CHECK(o.size() == 1);
}

TEST_CASE("triality projection table of D4") {
    auto t = TwistDatum::build('D', 4, 3);
    const int m = 3;
    QVec a1 = qv({1, -1, 0, 0});
    QVec a2 = qv({0, 1, -1, 0});
    QVec r3 = qv({1, 0, -1, 0});                 // a1 + a2 = e1 - e3
    QVec r4 = qv({1, 0, 0, -1});                 // a1 + a2 + a3 = e1 - e4
    QVec r5 = qv({1, 1, 0, 0});                  // e1 + e2
    QVec r6 = qv({1, 0, 1, 0});                  // e1 + e3

    // frozen value: pi(a1) = (1, -1, 2, 0) / 3, pi1(a1) = (1, -1, -1, 1+2w)/3
    QVec pa1 = pi_fixed(t, a1);
    CHECK(pa1 == QVec{Rational(1, 3), Rational(-1, 3), Rational(2, 3), Rational(0)});
    CycVec p1a1 = pi_k(t, a1, 1).coords;
    Rational third(1, 3);
    Cyc w = Cyc::omega(m);
    CycVec expected_p1a1 = {Cyc(m, third), Cyc(m, -third), Cyc(m, -third),
                            third * (Cyc(m, Rational(1)) + Rational(2) * w)};
    CHECK(p1a1 == expected_p1a1);

    // pi column: pi(a1), pi(a1)+a2, 2pi(a1)+a2, 3pi(a1)+2a2, 3pi(a1)+a2, a2
    CHECK(pi_fixed(t, r3) == qvec_add(pa1, a2));
    CHECK(pi_fixed(t, r4) == qvec_add(qvec_scale(Rational(2), pa1), a2));
    CHECK(pi_fixed(t, r5) == qvec_add(qvec_scale(Rational(3), pa1), qvec_scale(Rational(2), a2)));
    CHECK(pi_fixed(t, r6) == qvec_add(qvec_scale(Rational(3), pa1), a2));
    CHECK(pi_fixed(t, a2) == a2);

    // pi1 column: pi1(a1), pi1(a1), (1+w) pi1(a1), 0, 0, 0
    CHECK(pi_k(t, r3, 1).coords == p1a1);
    CHECK(pi_k(t, r4, 1).coords == cycvec_scale(Cyc(m, Rational(1)) + w, p1a1));
    CHECK(cycvec_is_zero(pi_k(t, r5, 1).coords));
    CHECK(cycvec_is_zero(pi_k(t, r6, 1).coords));
    CHECK(cycvec_is_zero(pi_k(t, a2, 1).coords));

    // pi2 column is the conjugate of the pi1 column
    for (const auto& row : {a1, r3, r4, r5, r6, a2})
        CHECK(pi_k(t, row, 2).coords == cycvec_conjugate(pi_k(t, row, 1).coords));
}

TEST_CASE("projection identities") {
    for (auto [type, rank, order] : std::vector<std::tuple<char, int, int>>{
             {'D', 4, 3}, {'A', 3, 2}, {'A', 4, 2}, {'D', 4, 2}, {'A', 2, 1}}) {
        auto t = TwistDatum::build(type, rank, order);
        const int m = t.order();
        for (const auto& a : t.finite().roots()) {
            // sum over k of pi_k(a) = a
            CycVec total(a.size(), Cyc(m));
            for (int k = 0; k < m; ++k) total = cycvec_add(total, pi_k(t, a, k).coords);
            CHECK(total == cycvec_from_rational(a, m));
            for (int k = 0; k < m; ++k) {
                // sigma pi_k = w^k pi_k, as an exact cyclotomic identity
                auto p = pi_k(t, a, k).coords;
                // apply sigma coordinatewise: sigma is rational, so it acts
                // on each cyclotomic coefficient vector slotwise
                CycVec sp(a.size(), Cyc(m));
                for (size_t j = 0; j < a.size(); ++j) {
                    // sigma(e_j) read off by applying to unit vectors
                    QVec e(a.size(), Rational(0));
                    e[j] = 1;
                    QVec se = t.sigma().apply(e);
                    for (size_t i = 0; i < a.size(); ++i) sp[i] += Cyc(m, se[i]) * p[j];
                }
                CHECK(sp == cycvec_scale(Cyc::omega_pow(m, k), p));
            }
            // pi(a) != 0 for every nonzero root (prime order / identity)
            CHECK(!qvec_is_zero(pi_fixed(t, a)));
        }
        // (pi(a), pi(b)) = (a, pi(b))
        for (const auto& a : t.finite().roots())
            for (const auto& b : t.finite().base()) {
                QVec pa = pi_fixed(t, a), pb = pi_fixed(t, b);
                CHECK(t.finite().form(pa, pb) == t.finite().form(a, pb));
            }
    }
}

TEST_CASE("orbit mates project to omega multiples") {
    auto t = TwistDatum::build('D', 4, 3);
    const int m = 3;
    for (const auto& a : t.finite().roots()) {
        QVec b = t.sigma().apply(a);   // orbit shift i = 1
        for (int k = 0; k < m; ++k)
            CHECK(pi_k(t, b, k).coords ==
                  cycvec_scale(Cyc::omega_pow(m, k), pi_k(t, a, k).coords));
    }
}

TEST_CASE("separation") {
    CHECK(separation_check(TwistDatum::build('D', 4, 3)).separated);
    CHECK(separation_check(TwistDatum::build('A', 3, 2)).separated);
    CHECK(separation_check(TwistDatum::build('A', 4, 2)).separated);
    CHECK(separation_check(TwistDatum::build('D', 4, 2)).separated);
    CHECK(separation_check(TwistDatum::build('A', 2, 1)).separated);
}

TEST_CASE("n_sigma_k for the triality datum") {
    auto t = TwistDatum::build('D', 4, 3);
    CHECK(n_sigma_k(t, 0) == 6);   // every representative has pi != 0
    CHECK(n_sigma_k(t, 1) == 3);   // the three singleton orbits project to 0
    CHECK(n_sigma_k(t, 2) == 3);
    CHECK(n_sigma_k(t, 4) == 3);   // k is reduced mod m

    auto id = TwistDatum::build('A', 2, 1);
    CHECK(n_sigma_k(id, 0) == orbits(id).orbits.size());
}

TEST_CASE("isotropic dimensions of the triality affinization") {
    auto t = TwistDatum::build('D', 4, 3);
    for (int k = 1; k <= 12; ++k) {
        size_t want = (k % 3 == 0) ? 2 : 1;
        CHECK(isotropic_dim(t, k) == want);
    }
    CHECK(cartan_projection_dim(t, 0) == 2);
    CHECK(cartan_projection_dim(t, 1) == 1);
    CHECK(cartan_projection_dim(t, 2) == 1);

    // untwisted: the full rank, for every k
    auto id = TwistDatum::build('A', 2, 1);
    for (int k = 1; k <= 4; ++k) CHECK(isotropic_dim(id, k) == 2);
}

TEST_CASE("affinized root data") {
    auto t = TwistDatum::build('D', 4, 3);
    auto data = affinized_root_data(t, 6);
    REQUIRE(data.iso_rows.size() == 6);
    std::vector<size_t> dims;
    for (const auto& row : data.iso_rows) dims.push_back(row.dim);
    CHECK(dims == std::vector<size_t>{1, 1, 2, 1, 1, 2});
    CHECK(data.cartan_dim == 2);

    // real rows: size-3 orbits occur at every residue, fixed roots only at 0
    size_t full = 0, fixed = 0;
    for (const auto& row : data.real_rows) {
        CHECK(row.dim == 1);
        if (row.n != 0) ++full;
        else ++fixed;
    }
    CHECK(full == 6);    // 3 orbits x residues {1, 2}
    CHECK(fixed == 6);   // all 6 orbits at residue 0

    auto id = affinized_root_data(TwistDatum::build('A', 2, 1), 3);
    for (const auto& row : id.iso_rows) CHECK(row.dim == 2);
}
