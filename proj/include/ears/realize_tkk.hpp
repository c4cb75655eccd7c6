#pragma once

#include "ears/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ears {

/// The A_1 Jordan torus J = sum over sigma in S of K x^sigma, with
/// x^sigma x^tau = x^{sigma+tau} exactly when sigma and tau lie in a common
/// S_0 u S_i, and 0 otherwise (the Gamma rule). Exponents outside S carry
/// the zero vector x^sigma = 0.
class JordanDatum {
public:
    JordanDatum(int nu, std::vector<IVec> taus);

    int nu() const { return nu_; }
    size_t index() const { return taus_.size() - 1; }   // number of nonzero reps
    const std::vector<IVec>& taus() const { return taus_; }
    const Semilattice& s() const { return s_; }

    /// Coset index into taus (0..m) when v lies in S.
    std::optional<size_t> coset_index(const IVec& v) const;
    bool in_s(const IVec& v) const { return coset_index(v).has_value(); }
    bool in_r0(const IVec& v) const { return r0_.contains(v); }   // S + S

    /// Gamma(S_i, S_j) evaluated on representatives of the cosets of a, b;
    /// zero when either argument leaves S.
    bool gamma(const IVec& a, const IVec& b) const;

    /// Lattice points of S inside [-box, box]^nu.
    std::vector<IVec> s_points(int box) const;

private:
    int nu_;
    std::vector<IVec> taus_;
    Semilattice s_;
    CosetSet r0_;
};

/// Finitely supported element of the Jordan torus; keys always lie in S.
class JordanElement {
public:
    explicit JordanElement(const JordanDatum* d) : d_(d) {}

    static JordanElement monomial(const JordanDatum& d, const IVec& exp,
                                  const Rational& c = Rational(1));

    const std::map<IVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const IVec& exp, const Rational& c);

    JordanElement operator-() const;
    friend JordanElement operator+(const JordanElement& a, const JordanElement& b);
    friend JordanElement operator-(const JordanElement& a, const JordanElement& b);
    friend bool operator==(const JordanElement& a, const JordanElement& b);

    const JordanDatum& datum() const { return *d_; }

private:
    const JordanDatum* d_;
    std::map<IVec, Rational> terms_;
};

/// Exact product under the Gamma rule, extended bilinearly.
JordanElement jordan_mul(const JordanElement& x, const JordanElement& y);

/// Operator on the Jordan torus assembled from multiplications L_x and
/// commutators [L_a, L_b]. Application to a monomial is exact; operators
/// are compared by their action on every basis vector x^gamma with gamma in
/// a box of S.
class TkkOperator {
public:
    explicit TkkOperator(const JordanDatum* d) : d_(d) {}

    static TkkOperator mul(const JordanElement& x);                            // L_x
    static TkkOperator commutator(const JordanElement& a, const JordanElement& b);

    TkkOperator operator-() const;
    friend TkkOperator operator+(const TkkOperator& a, const TkkOperator& b);

    JordanElement apply(const JordanElement& v) const;
    JordanElement apply_monomial(const IVec& gamma) const;

    bool is_zero_on(int box) const;
    const JordanDatum& datum() const { return *d_; }

private:
    const JordanDatum* d_;
    std::vector<std::pair<Rational, JordanElement>> mul_terms_;
    std::vector<std::tuple<Rational, JordanElement, JordanElement>> comm_terms_;
};

/// Equality of operators on every basis monomial of the box.
bool tkk_ops_equal(const TkkOperator& a, const TkkOperator& b, int box);

enum class TkkBracketCase {
    Multiplication,   // i = 0, or t even, or sigma in S_0 u S_i: L_{x^{t sigma}}
    Commutator        // otherwise: +-[L_{x^{lambda_i+(t-1) sigma}}, L_{x^{-lambda_i+sigma}}]
};

struct TkkBracketResult {
    TkkBracketCase bracket_case;
    TkkOperator formula;     // the closed-form side (sign as printed, +)
    TkkOperator direct;      // L_{x dot y} + [L_x, L_y] evaluated directly
    int observed_sign = 0;   // +1 / -1 when the commutator case matches up to sign
    bool agrees = false;     // equality (sign-adjusted in the commutator case)
    bool nonzero = false;    // the bracket operator is nonzero on the box
};

/// Classifies and evaluates [x^{lambda_i + n sigma}, xbar^{-lambda_i + n' sigma}]
/// (t = n + n') both by the case formula and by direct evaluation of
/// L_{x y} + [L_x, L_y], comparing the two on the box. lambda_i is the
/// stored representative tau_i. Requires both exponents in S and sigma a
/// nonzero isotropic root with lambda_i + sigma in S.
TkkBracketResult tkk_bracket_class(const JordanDatum& d, size_t i, const IVec& sigma, int n,
                                   int n_prime, int box);

struct TkkIdentityReport {
    std::vector<std::pair<std::string, std::string>> checks;   // identity -> summary
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive verification of the multiplication-operator identities on the
/// truncated basis: the Gamma table values, associativity-with-Gamma for
/// monomial triples, vanishing of [L,L] against S_0 in any slot, vanishing
/// of [L_sigma, L_tau] for a common coset, and the shift identity
/// [L_{x^sigma}, L_{x^tau}] = [L_{x^{sigma+tau+tau_j}}, L_{x^{-tau_j}}]
/// with j the coset of tau.
TkkIdentityReport rokn3_check(const JordanDatum& d, int box);

} // namespace ears
