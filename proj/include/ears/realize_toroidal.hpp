#pragma once

#include "ears/finroots.hpp"
#include "ears/lattice.hpp"

#include <map>
#include <vector>

namespace ears {

using QMat = std::vector<std::vector<Rational>>;

QMat sl_unit(int n, int i, int j);                  // E_ij
QMat qmat_bracket(const QMat& a, const QMat& b);    // ab - ba
Rational qmat_trace_form(const QMat& a, const QMat& b);
bool qmat_is_zero(const QMat& a);

/// Element of the toroidal algebra over sl_{l+1}: a finite sum of
/// matrix-times-monomial terms plus central and derivation coordinates.
/// Brackets follow the loop-algebra rule with the trace-form cocycle on the
/// central part and the degree action of the derivations.
class ToroidalElement {
public:
    ToroidalElement(int l, int nu)
        : l_(l), nu_(nu), central_(nu, Rational(0)), deriv_(nu, Rational(0)) {}

    static ToroidalElement term(int l, int nu, const QMat& a, const IVec& lambda);
    static ToroidalElement central(int l, int nu, size_t i);     // c_{i+1}
    static ToroidalElement derivation(int l, int nu, size_t i);  // d_{i+1}

    int l() const { return l_; }
    int nu() const { return nu_; }
    const std::map<IVec, QMat>& terms() const { return terms_; }
    const QVec& central_coords() const { return central_; }
    const QVec& derivation_coords() const { return deriv_; }

    bool is_zero() const;
    void add_term(const IVec& lambda, const QMat& a);
    QVec& central_coords() { return central_; }
    QVec& derivation_coords() { return deriv_; }

    ToroidalElement operator-() const;
    friend ToroidalElement operator+(const ToroidalElement& a, const ToroidalElement& b);
    friend ToroidalElement operator-(const ToroidalElement& a, const ToroidalElement& b);
    friend bool operator==(const ToroidalElement& a, const ToroidalElement& b);

private:
    int l_, nu_;
    std::map<IVec, QMat> terms_;
    QVec central_;
    QVec deriv_;
};

/// [x, y] with the central 2-cocycle term delta_{lambda,-mu} (a,b) sum
/// lambda_i c_i and the derivation action d_i (a ox t^lambda) = lambda_i a
/// ox t^lambda. Central elements bracket to zero with everything.
ToroidalElement toroidal_bracket(const ToroidalElement& x, const ToroidalElement& y);

/// Invariant form: (a ox t^l + c + d, b ox t^m + c' + d') =
/// delta_{l,-m} tr(ab) + c(d') + c'(d).
Rational toroidal_form(const ToroidalElement& x, const ToroidalElement& y);

struct ToroidalIsotropicSpace {
    std::vector<ToroidalElement> basis;
    size_t dim = 0;
};

/// Basis of sum over alpha of [E_{alpha + r delta}, E_{-alpha + s delta}],
/// r + s = k != 0, computed from actual brackets; the span is the Cartan of
/// sl_{l+1} tensored with t^{k delta}, so dim = l.
ToroidalIsotropicSpace toroidal_isotropic_space(int l, int nu, const IVec& delta, int k,
                                                int box);

} // namespace ears
