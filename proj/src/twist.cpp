#include "ears/twist.hpp"

#include "ears/exact_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ears {

bool cycvec_is_zero(const CycVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

CycVec cycvec_add(const CycVec& a, const CycVec& b) {
    CycVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

CycVec cycvec_scale(const Cyc& s, const CycVec& a) {
    CycVec r = a;
    for (auto& c : r) c = s * c;
    return r;
}

CycVec cycvec_conjugate(const CycVec& a) {
    CycVec r = a;
    for (auto& c : r) c = c.conjugate();
    return r;
}

CycVec cycvec_from_rational(const QVec& v, int order) {
    CycVec r;
    for (const auto& x : v) r.push_back(Cyc(order, x));
    return r;
}

ProjectionVector pi_k(const TwistDatum& t, const QVec& v, int k) {
    const int m = t.order();
    k = ((k % m) + m) % m;
    CycVec acc(v.size(), Cyc(m));
    const Rational inv_m(1, m);
    QVec power = v;
    for (int i = 0; i < m; ++i) {
        Cyc w = Cyc::omega_pow(m, -static_cast<long long>(i) * k);
        for (size_t j = 0; j < v.size(); ++j) acc[j] += (inv_m * power[j]) * w;
        power = t.sigma().apply(power);
    }
    return {k, acc};
}

QVec pi_fixed(const TwistDatum& t, const QVec& v) {
    auto p = pi_k(t, v, 0);
    QVec out;
    for (const auto& c : p.coords) {
        if (!c.is_rational()) throw std::logic_error("pi_fixed: projection not rational");
        out.push_back(c.rational_value());
    }
    return out;
}

namespace {

// squared length (pi(a), pi(a)) evaluated over Q; pi_0 of a rational vector
// is rational, and the host form scale carries over
Rational pi_norm(const TwistDatum& t, const QVec& a) {
    QVec p = pi_fixed(t, a);
    Rational s = 0;
    for (const auto& c : p) s += c * c;
    return t.finite().form_scale() * s;
}

// orbit of a root under <sigma>
std::vector<QVec> orbit_of(const TwistDatum& t, const QVec& a) {
    std::vector<QVec> orb{a};
    QVec cur = t.sigma().apply(a);
    while (cur != a) {
        orb.push_back(cur);
        cur = t.sigma().apply(cur);
    }
    return orb;
}

// deterministic representative: lexicographically greatest base-coordinate
// vector; on positive orbits this starts each orbit at its alpha_1-most root
QVec pick_representative(const FiniteRootSystem& fin, const std::vector<QVec>& orbit) {
    const QVec* best = &orbit[0];
    IVec best_c = fin.base_coordinates(orbit[0]);
    for (size_t i = 1; i < orbit.size(); ++i) {
        IVec c = fin.base_coordinates(orbit[i]);
        if (c > best_c) {
            best_c = c;
            best = &orbit[i];
        }
    }
    return *best;
}

} // namespace

OrbitTable orbits(const TwistDatum& t) {
    OrbitTable table;
    std::set<QVec> done;
    for (const auto& a : t.finite().positive_roots()) {
        if (done.count(a)) continue;
        if (pi_norm(t, a).is_zero()) continue;
        auto orb = orbit_of(t, a);
        for (const auto& x : orb) done.insert(x);
        std::sort(orb.begin(), orb.end());
        table.orbits.push_back(std::move(orb));
    }
    for (const auto& orb : table.orbits)
        table.representatives.push_back(pick_representative(t.finite(), orb));
    // canonical order: larger orbits first, then by representative base coords
    std::vector<size_t> idx(table.orbits.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (table.orbits[a].size() != table.orbits[b].size())
            return table.orbits[a].size() > table.orbits[b].size();
        return t.finite().base_coordinates(table.representatives[a]) <
               t.finite().base_coordinates(table.representatives[b]);
    });
    OrbitTable sorted;
    for (size_t i : idx) {
        sorted.orbits.push_back(std::move(table.orbits[i]));
        sorted.representatives.push_back(std::move(table.representatives[i]));
    }
    return sorted;
}

SeparationReport separation_check(const TwistDatum& t) {
    SeparationReport rep;
    // all roots of R^x_pi, both signs, with an orbit id each
    std::map<QVec, size_t> orbit_id;
    size_t next_id = 0;
    for (const auto& a : t.finite().roots()) {
        if (orbit_id.count(a)) continue;
        if (pi_norm(t, a).is_zero()) continue;
        for (const auto& x : orbit_of(t, a)) orbit_id[x] = next_id;
        ++next_id;
    }
    std::vector<const QVec*> roots;
    for (const auto& [root, id] : orbit_id) roots.push_back(&root);
    std::vector<QVec> projections;
    for (const auto* r : roots) projections.push_back(pi_fixed(t, *r));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (projections[i] != projections[j]) continue;
            if (orbit_id.at(*roots[i]) != orbit_id.at(*roots[j])) {
                rep.separated = false;
                rep.witnesses.emplace_back(*roots[i], *roots[j]);
            }
        }
    return rep;
}

size_t n_sigma_k(const TwistDatum& t, int k) {
    size_t n = 0;
    for (const auto& rep : orbits(t).representatives)
        if (!cycvec_is_zero(pi_k(t, rep, k).coords)) ++n;
    return n;
}

size_t cartan_projection_dim(const TwistDatum& t, int k) {
    std::vector<CycVec> rows;
    for (const auto& b : t.finite().base()) {
        auto p = pi_k(t, b, k);
        if (!cycvec_is_zero(p.coords)) rows.push_back(p.coords);
    }
    if (rows.empty()) return 0;
    return exact_rank(ExactMatrix<Cyc>::from_rows(rows));
}

size_t isotropic_dim(const TwistDatum& t, int k) {
    std::vector<CycVec> rows;
    size_t nonzero = 0;
    for (const auto& rep : orbits(t).representatives) {
        auto p = pi_k(t, rep, k);
        if (cycvec_is_zero(p.coords)) continue;
        ++nonzero;
        rows.push_back(p.coords);
    }
    size_t dim = rows.empty() ? 0 : exact_rank(ExactMatrix<Cyc>::from_rows(rows));
    if (dim > nonzero) throw std::logic_error("isotropic_dim: bound n_sigma_k violated");
    if (dim > cartan_projection_dim(t, k))
        throw std::logic_error("isotropic_dim: bound dim pi_k(h) violated");
    return dim;
}

AffinizedData affinized_root_data(const TwistDatum& t, int kmax) {
    AffinizedData out;
    const int m = t.order();
    auto table = orbits(t);
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        const int d = static_cast<int>(table.orbits[i].size());
        const int step = m / d;   // orbit sizes divide the order
        for (int n = 0; n < m; n += step)
            out.real_rows.push_back({table.representatives[i], n, 1});
    }
    for (int k = 1; k <= kmax; ++k) out.iso_rows.push_back({{}, k, isotropic_dim(t, k)});
    out.cartan_dim = cartan_projection_dim(t, 0);
    return out;
}

} // namespace ears
