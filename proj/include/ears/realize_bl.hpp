#pragma once

#include "ears/ears_core.hpp"
#include "ears/laurent.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ears {

/// Sparse square matrix over the Laurent ring.
class LaurentMatrix {
public:
    LaurentMatrix(size_t n, int nvars) : n_(n), nvars_(nvars) {}

    size_t size() const { return n_; }
    int nvars() const { return nvars_; }
    const std::map<std::pair<size_t, size_t>, LaurentPoly>& entries() const { return entries_; }

    LaurentPoly at(size_t i, size_t j) const;
    void add(size_t i, size_t j, const LaurentPoly& p);
    bool is_zero() const { return entries_.empty(); }

    LaurentMatrix operator-() const;
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);

    LaurentMatrix transposed() const;

private:
    size_t n_;
    int nvars_;
    std::map<std::pair<size_t, size_t>, LaurentPoly> entries_;   // nonzero only
};

/// The type-B matrix family: n = 2l + m matrices X over the Laurent ring
/// with G^{-1} X^t G = -X, where G carries the diagonal block
/// F = diag(t^{tau_1}, ..., t^{tau_m}) built from coset representatives of
/// the semilattice S (tau_1 = 0). Root spaces follow the short/long split of
/// B_l with L = 2 Z^nu.
class BlDatum {
public:
    /// `taus` lists the coset representatives with taus[0] = 0.
    BlDatum(int l, int nu, std::vector<IVec> taus);

    int l() const { return l_; }
    int nu() const { return nu_; }
    size_t m() const { return taus_.size(); }
    size_t n() const { return 2 * static_cast<size_t>(l_) + taus_.size(); }
    const std::vector<IVec>& taus() const { return taus_; }
    const EarsDatum& ears() const { return ears_; }

    LaurentMatrix g_matrix() const;
    LaurentMatrix g_inverse() const;

    /// Coset index (0-based into taus) of a lattice vector in S.
    std::optional<size_t> coset_index(const IVec& v) const;

    /// Grading: deg(t^gamma e_pq) = 2 gamma + lambda_p - lambda_q with
    /// lambda_p = 0 on the first 2l slots and tau_j on slot 2l + j.
    IVec slot_weight(size_t p) const;

    /// The degree of a homogeneous matrix, or nullopt when entries disagree.
    std::optional<IVec> degree(const LaurentMatrix& x) const;

    /// Does G^{-1} X^t G = -X hold?
    bool in_algebra(const LaurentMatrix& x) const;

private:
    int l_, nu_;
    std::vector<IVec> taus_;
    EarsDatum ears_;
};

/// Generators of the root space E_root: one matrix for each nonisotropic
/// member root. Short roots +-e_i produce X(gamma, i, r) / Xbar(gamma, i, r)
/// with r the coset of the lattice part; long roots e_i +- e_j produce the
/// two-unit matrices at gamma = lattice/2. Throws for isotropic or
/// non-member input.
std::vector<LaurentMatrix> bl_root_space(const BlDatum& d, const EarsRoot& root);

/// Matrix commutator XY - YX over the Laurent ring.
LaurentMatrix bl_bracket(const LaurentMatrix& x, const LaurentMatrix& y);

struct BlIsotropicResult {
    size_t dim = 0;
    size_t expected = 0;       // l when k sigma lies in L = 2 Z^nu, else 1
    size_t brackets_used = 0;
    bool matches() const { return dim == expected; }
};

/// Dimension of span { [E_{alpha + n sigma}, E_{-alpha + n' sigma}] :
/// n + n' = k }, computed from actual brackets over all roots alpha with
/// lattice offsets in the box, then exact rank over Q.
BlIsotropicResult bl_isotropic_dim(const BlDatum& d, const IVec& sigma, int k, int box);

} // namespace ears
