#pragma once

#include "ears/cyclotomic.hpp"
#include "ears/finroots.hpp"

#include <memory>
#include <vector>

namespace ears {

using CycVec = std::vector<Cyc>;

bool cycvec_is_zero(const CycVec& v);
CycVec cycvec_add(const CycVec& a, const CycVec& b);
CycVec cycvec_scale(const Cyc& s, const CycVec& a);
CycVec cycvec_conjugate(const CycVec& a);
CycVec cycvec_from_rational(const QVec& v, int order);

/// A finite root system together with a diagram automorphism of order m
/// (m = 1, 2 or 3; always 1 or a prime). Owns the root system so the
/// automorphism's host reference stays valid.
class TwistDatum {
public:
    TwistDatum(FiniteRootSystem fin, int order)
        : fin_(std::make_shared<FiniteRootSystem>(std::move(fin))),
          sigma_(diagram_automorphism(*fin_, order)) {}

    static TwistDatum build(char type, int rank, int order) {
        return TwistDatum(build_finite(type, rank), order);
    }

    const FiniteRootSystem& finite() const { return *fin_; }
    const DiagramAutomorphism& sigma() const { return sigma_; }
    int order() const { return sigma_.order(); }

private:
    std::shared_ptr<const FiniteRootSystem> fin_;
    DiagramAutomorphism sigma_;
};

struct ProjectionVector {
    int k = 0;          // residue mod m
    CycVec coords;      // exact coordinates over Q(zeta_m)
};

/// Eigenprojection pi_k(v) = (1/m) sum_i w^{-ik} sigma^i(v); k is reduced
/// mod m. The pi_k sum to the identity and satisfy sigma pi_k = w^k pi_k.
ProjectionVector pi_k(const TwistDatum& t, const QVec& v, int k);

/// pi_0, the projection onto the fixed space; rational-valued.
QVec pi_fixed(const TwistDatum& t, const QVec& v);

struct OrbitTable {
    /// Orbits of <sigma> on the positive roots with (pi(a), pi(a)) != 0,
    /// ordered by descending size and then by representative. The negative
    /// roots carry no extra information since pi_k(-a) = -pi_k(a).
    std::vector<std::vector<QVec>> orbits;
    std::vector<QVec> representatives;   // per orbit; deterministic choice
};

OrbitTable orbits(const TwistDatum& t);

struct SeparationReport {
    bool separated = true;
    std::vector<std::pair<QVec, QVec>> witnesses;   // distinct-orbit pairs with pi(a) = pi(b)
};

/// Does pi separate the orbits: pi(a) = pi(b) only within one orbit?
/// Checked over every pair of roots in R^x_pi (both signs).
SeparationReport separation_check(const TwistDatum& t);

/// Number of orbit representatives with pi_k != 0.
size_t n_sigma_k(const TwistDatum& t, int k);

/// dim span_{Q(zeta_m)} { pi_k(a) : a representative, pi_k(a) != 0 }, the
/// dimension of the k delta root space of the affinization intersected with
/// the core. Asserts dim <= n_sigma_k and dim <= dim pi_k(h).
size_t isotropic_dim(const TwistDatum& t, int k);

/// dim pi_k of the reflection space (the span of the simple roots).
size_t cartan_projection_dim(const TwistDatum& t, int k);

struct AffinizedRow {
    QVec rep;      // orbit representative; empty for isotropic rows
    int n = 0;     // delta multiple: residue mod m for real rows, k for isotropic
    size_t dim = 0;
};

struct AffinizedData {
    std::vector<AffinizedRow> real_rows;   // (pi(rep), n): dimension 1 each
    std::vector<AffinizedRow> iso_rows;    // k delta for k = 1..kmax
    size_t cartan_dim = 0;                 // dim of the fixed part of the Cartan
};

/// Root-space dimension listing of the twisted affinization: a real row
/// (pi(rep), n) appears when the orbit of size d admits the residue
/// (m/d divides n) and always has dimension 1; the k delta rows carry
/// isotropic_dim(k).
AffinizedData affinized_root_data(const TwistDatum& t, int kmax);

} // namespace ears
