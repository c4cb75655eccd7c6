#include "ears/realize_toroidal.hpp"

#include "ears/exact_matrix.hpp"

#include <stdexcept>

namespace ears {

QMat sl_unit(int n, int i, int j) {
    QMat m(n, QVec(n, Rational(0)));
    m[i][j] = 1;
    return m;
}

QMat qmat_bracket(const QMat& a, const QMat& b) {
    const size_t n = a.size();
    QMat r(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return r;
}

Rational qmat_trace_form(const QMat& a, const QMat& b) {
    Rational s = 0;
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][i];
    return s;
}

bool qmat_is_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

ToroidalElement ToroidalElement::term(int l, int nu, const QMat& a, const IVec& lambda) {
    ToroidalElement e(l, nu);
    e.add_term(lambda, a);
    return e;
}

ToroidalElement ToroidalElement::central(int l, int nu, size_t i) {
    ToroidalElement e(l, nu);
    e.central_[i] = 1;
    return e;
}

ToroidalElement ToroidalElement::derivation(int l, int nu, size_t i) {
    ToroidalElement e(l, nu);
    e.deriv_[i] = 1;
    return e;
}

bool ToroidalElement::is_zero() const {
    if (!terms_.empty()) return false;
    for (const auto& x : central_)
        if (!x.is_zero()) return false;
    for (const auto& x : deriv_)
        if (!x.is_zero()) return false;
    return true;
}

void ToroidalElement::add_term(const IVec& lambda, const QMat& a) {
    if (static_cast<int>(lambda.size()) != nu_)
        throw std::invalid_argument("ToroidalElement: monomial rank mismatch");
    if (static_cast<int>(a.size()) != l_ + 1)
        throw std::invalid_argument("ToroidalElement: matrix size mismatch");
    if (qmat_is_zero(a)) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_[lambda] = a;
        return;
    }
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) it->second[i][j] += a[i][j];
    if (qmat_is_zero(it->second)) terms_.erase(it);
}

ToroidalElement ToroidalElement::operator-() const {
    ToroidalElement r(l_, nu_);
    for (const auto& [lam, a] : terms_) {
        QMat neg = a;
        for (auto& row : neg)
            for (auto& x : row) x = -x;
        r.terms_[lam] = neg;
    }
    for (int i = 0; i < nu_; ++i) {
        r.central_[i] = -central_[i];
        r.deriv_[i] = -deriv_[i];
    }
    return r;
}

ToroidalElement operator+(const ToroidalElement& a, const ToroidalElement& b) {
    if (a.l_ != b.l_ || a.nu_ != b.nu_)
        throw std::invalid_argument("ToroidalElement: dimension mismatch");
    ToroidalElement r = a;
    for (const auto& [lam, m] : b.terms_) r.add_term(lam, m);
    for (int i = 0; i < r.nu_; ++i) {
        r.central_[i] += b.central_[i];
        r.deriv_[i] += b.deriv_[i];
    }
    return r;
}

ToroidalElement operator-(const ToroidalElement& a, const ToroidalElement& b) {
    return a + (-b);
}

bool operator==(const ToroidalElement& a, const ToroidalElement& b) {
    return a.l_ == b.l_ && a.nu_ == b.nu_ && a.terms_ == b.terms_ &&
           a.central_ == b.central_ && a.deriv_ == b.deriv_;
}

ToroidalElement toroidal_bracket(const ToroidalElement& x, const ToroidalElement& y) {
    if (x.l() != y.l() || x.nu() != y.nu())
        throw std::invalid_argument("toroidal_bracket: dimension mismatch");
    const int l = x.l(), nu = x.nu();
    ToroidalElement out(l, nu);
    // [a ox t^lam, b ox t^mu]
    for (const auto& [lam, a] : x.terms()) {
        for (const auto& [mu, b] : y.terms()) {
            out.add_term(add(lam, mu), qmat_bracket(a, b));
            bool opposite = true;
            for (int i = 0; i < nu; ++i)
                if (lam[i] + mu[i] != 0) opposite = false;
            if (opposite) {
                Rational f = qmat_trace_form(a, b);
                for (int i = 0; i < nu; ++i)
                    out.central_coords()[i] += f * Rational(lam[i]);
            }
        }
    }
    // derivations act by degree; [d, d'] = 0 and [c, anything] = 0
    for (const auto& [mu, b] : y.terms()) {
        Rational w = 0;
        for (int i = 0; i < nu; ++i) w += x.derivation_coords()[i] * Rational(mu[i]);
        if (!w.is_zero()) {
            QMat scaled = b;
            for (auto& row : scaled)
                for (auto& v : row) v *= w;
            out.add_term(mu, scaled);
        }
    }
    for (const auto& [lam, a] : x.terms()) {
        Rational w = 0;
        for (int i = 0; i < nu; ++i) w += y.derivation_coords()[i] * Rational(lam[i]);
        if (!w.is_zero()) {
            QMat scaled = a;
            for (auto& row : scaled)
                for (auto& v : row) v *= -w;
            out.add_term(lam, scaled);
        }
    }
    return out;
}

Rational toroidal_form(const ToroidalElement& x, const ToroidalElement& y) {
    if (x.l() != y.l() || x.nu() != y.nu())
        throw std::invalid_argument("toroidal_form: dimension mismatch");
    Rational s = 0;
    for (const auto& [lam, a] : x.terms()) {
        auto it = y.terms().find(neg(lam));
        if (it != y.terms().end()) s += qmat_trace_form(a, it->second);
    }
    for (int i = 0; i < x.nu(); ++i) {
        s += x.central_coords()[i] * y.derivation_coords()[i];
        s += y.central_coords()[i] * x.derivation_coords()[i];
    }
    return s;
}

ToroidalIsotropicSpace toroidal_isotropic_space(int l, int nu, const IVec& delta, int k,
                                                int box) {
    if (k == 0) throw std::invalid_argument("toroidal_isotropic_space: k = 0");
    bool zero = true;
    for (const Int& x : delta)
        if (x != 0) zero = false;
    if (zero) throw std::invalid_argument("toroidal_isotropic_space: delta = 0");

    // brackets [E_ij ox t^{(u+r) delta}, E_ji ox t^{(k-u-r) delta}] over a
    // box of offsets; every one lands in (Cartan) ox t^{k delta}
    std::vector<ToroidalElement> produced;
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
            if (i == j) continue;
            for (int u = -box; u <= box; ++u)
                for (int r = -box; r <= box; ++r) {
                    IVec lam = scale(Int(u + r), delta);
                    IVec mu = scale(Int(k - u - r), delta);
                    auto x = ToroidalElement::term(l, nu, sl_unit(l + 1, i, j), lam);
                    auto y = ToroidalElement::term(l, nu, sl_unit(l + 1, j, i), mu);
                    auto br = toroidal_bracket(x, y);
                    if (!br.is_zero()) produced.push_back(br);
                }
        }

    // coordinates: flatten matrix entries per monomial plus central coords
    std::map<std::tuple<IVec, int, int>, size_t> columns;
    for (const auto& e : produced)
        for (const auto& [lam, a] : e.terms())
            for (int i = 0; i <= l; ++i)
                for (int j = 0; j <= l; ++j)
                    if (!a[i][j].is_zero()) columns.try_emplace({lam, i, j}, columns.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : produced) {
        std::vector<Rational> row(columns.size() + nu, Rational(0));
        for (const auto& [lam, a] : e.terms())
            for (int i = 0; i <= l; ++i)
                for (int j = 0; j <= l; ++j)
                    if (!a[i][j].is_zero()) row[columns.at({lam, i, j})] = a[i][j];
        for (int i = 0; i < nu; ++i) row[columns.size() + i] = e.central_coords()[i];
        rows.push_back(std::move(row));
    }

    ToroidalIsotropicSpace out;
    out.dim = rows.empty() ? 0 : exact_rank(ExactMatrix<Rational>::from_rows(rows));
    // greedy independent subset as the returned basis
    std::vector<std::vector<Rational>> picked;
    for (size_t i = 0; i < produced.size() && out.basis.size() < out.dim; ++i) {
        picked.push_back(rows[i]);
        if (exact_rank(ExactMatrix<Rational>::from_rows(picked)) == picked.size())
            out.basis.push_back(produced[i]);
        else
            picked.pop_back();
    }
    return out;
}

} // namespace ears
