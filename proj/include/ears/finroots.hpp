#pragma once

#include "ears/rational.hpp"
#include "ears/lattice.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ears {

using QVec = std::vector<Rational>;

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_neg(const QVec& a);
QVec qvec_scale(const Rational& s, const QVec& a);
bool qvec_is_zero(const QVec& a);
std::string qvec_str(const QVec& v);

/// Rational coordinates of v in the given (independent) rows, if v lies in
/// their span.
std::optional<QVec> rational_coordinates(const std::vector<QVec>& rows, const QVec& v);

/// Finite irreducible reduced root system in epsilon-coordinates. The
/// bilinear form is the standard inner product rescaled so that short roots
/// have squared length 2 (the scale is 2 for B_l and F_4, 1 otherwise).
class FiniteRootSystem {
public:
    char type_label() const { return type_; }
    int rank() const { return rank_; }
    size_t ambient_dim() const { return ambient_; }
    const Rational& form_scale() const { return scale_; }

    const std::vector<QVec>& roots() const { return roots_; }
    const std::vector<QVec>& positive_roots() const { return positive_; }
    const std::vector<QVec>& base() const { return base_; }
    const std::vector<QVec>& short_roots() const { return short_; }
    const std::vector<QVec>& long_roots() const { return long_; }
    bool simply_laced() const { return long_.empty(); }

    Rational form(const QVec& a, const QVec& b) const;
    bool is_root(const QVec& v) const { return lookup_.count(v) > 0; }
    bool is_short(const QVec& v) const;
    bool is_long(const QVec& v) const;
    bool is_positive(const QVec& v) const;

    /// alpha^vee = 2 alpha / (alpha, alpha); rejects isotropic input.
    QVec coroot(const QVec& alpha) const;

    /// Integer coordinates of a root in the simple base.
    IVec base_coordinates(const QVec& root) const;
    QVec from_base_coordinates(const IVec& coords) const;

    friend FiniteRootSystem build_finite(char type, int rank);

private:
    FiniteRootSystem() = default;
    void finish();

    char type_ = '?';
    int rank_ = 0;
    size_t ambient_ = 0;
    Rational scale_ = 1;
    std::vector<QVec> roots_, positive_, base_, short_, long_;
    std::set<QVec> lookup_;
    std::map<QVec, IVec> base_coords_;
};

/// Builds the root system for a classical (type, rank) pair:
/// A (l>=1), B (l>=2), C (l>=3), D (l>=4), E (6..8), F (4), G (2).
FiniteRootSystem build_finite(char type, int rank);

struct RootString {
    int down = 0;                    // d: steps toward beta - d*alpha
    int up = 0;                      // u: steps toward beta + u*alpha
    Rational pairing;                // (beta, alpha^vee), equals d - u
};

/// Root string of beta through alpha inside R union {0}. Verifies the string
/// law d - u = (beta, alpha^vee) and throws std::logic_error if it fails.
RootString root_string(const FiniteRootSystem& r, const QVec& alpha, const QVec& beta);

/// Form-preserving linear extension of a permutation of the simple base.
class DiagramAutomorphism {
public:
    const FiniteRootSystem& host() const { return *host_; }
    int order() const { return order_; }
    const std::vector<size_t>& base_permutation() const { return perm_; }

    QVec apply(const QVec& v) const;
    QVec apply_pow(const QVec& v, int k) const;

    friend DiagramAutomorphism diagram_automorphism(const FiniteRootSystem& r, int order);

private:
    const FiniteRootSystem* host_ = nullptr;
    int order_ = 1;
    std::vector<size_t> perm_;
    std::vector<QVec> matrix_;       // row i = image coordinates of e_i
};

/// Admissible pairs: order 1 for every type; order 2 for A_l (l>=2), D_l,
/// E_6; order 3 for D_4. Anything else is rejected.
DiagramAutomorphism diagram_automorphism(const FiniteRootSystem& r, int order);

} // namespace ears
