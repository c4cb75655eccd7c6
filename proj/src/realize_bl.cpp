#include "ears/realize_bl.hpp"

#include "ears/exact_matrix.hpp"

#include <stdexcept>

namespace ears {

LaurentPoly LaurentMatrix::at(size_t i, size_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? LaurentPoly(nvars_) : it->second;
}

void LaurentMatrix::add(size_t i, size_t j, const LaurentPoly& p) {
    if (i >= n_ || j >= n_) throw std::out_of_range("LaurentMatrix: index");
    if (p.is_zero()) return;
    auto [it, inserted] = entries_.emplace(std::make_pair(i, j), p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

LaurentMatrix LaurentMatrix::operator-() const {
    LaurentMatrix r(n_, nvars_);
    for (const auto& [ij, p] : entries_) r.entries_[ij] = -p;
    return r;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_ || a.nvars_ != b.nvars_)
        throw std::invalid_argument("LaurentMatrix: size mismatch");
    LaurentMatrix r = a;
    for (const auto& [ij, p] : b.entries_) r.add(ij.first, ij.second, p);
    return r;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) { return a + (-b); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_ || a.nvars_ != b.nvars_)
        throw std::invalid_argument("LaurentMatrix: size mismatch");
    LaurentMatrix r(a.n_, a.nvars_);
    for (const auto& [ij, p] : a.entries_)
        for (const auto& [kl, q] : b.entries_) {
            if (ij.second != kl.first) continue;
            r.add(ij.first, kl.second, p * q);
        }
    return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.entries_ == b.entries_;
}

LaurentMatrix LaurentMatrix::transposed() const {
    LaurentMatrix r(n_, nvars_);
    for (const auto& [ij, p] : entries_) r.entries_[{ij.second, ij.first}] = p;
    return r;
}

namespace {

LaurentPoly mono(int nvars, const IVec& e, const Rational& c = Rational(1)) {
    LaurentPoly::Exponent exp;
    for (const Int& x : e) exp.push_back(static_cast<long long>(x));
    return LaurentPoly::monomial(exp, c);
}

IVec half(const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] % 2 != 0) throw std::invalid_argument("expected an even lattice vector");
        r[i] = v[i] / 2;
    }
    return r;
}

} // namespace

BlDatum::BlDatum(int l, int nu, std::vector<IVec> taus)
    : l_(l), nu_(nu), taus_(std::move(taus)),
      ears_(build_finite('B', l),
            Semilattice(Lattice::standard(nu), taus_),
            Semilattice::two_standard(nu)) {
    if (l_ < 2) throw std::invalid_argument("BlDatum: l >= 2 required");
    if (taus_.empty()) throw std::invalid_argument("BlDatum: need at least tau_1 = 0");
    for (const Int& x : taus_[0])
        if (x != 0) throw std::invalid_argument("BlDatum: tau_1 must be 0");
    auto bad = ears_.structural_violations();
    if (!bad.empty()) throw std::invalid_argument("BlDatum: " + bad.front());
}

LaurentMatrix BlDatum::g_matrix() const {
    LaurentMatrix g(n(), nu_);
    const size_t l = static_cast<size_t>(l_);
    for (size_t i = 0; i < l; ++i) {
        g.add(i, l + i, LaurentPoly::constant(nu_, Rational(1)));
        g.add(l + i, i, LaurentPoly::constant(nu_, Rational(1)));
    }
    for (size_t j = 0; j < taus_.size(); ++j) g.add(2 * l + j, 2 * l + j, mono(nu_, taus_[j]));
    return g;
}

LaurentMatrix BlDatum::g_inverse() const {
    LaurentMatrix g(n(), nu_);
    const size_t l = static_cast<size_t>(l_);
    for (size_t i = 0; i < l; ++i) {
        g.add(i, l + i, LaurentPoly::constant(nu_, Rational(1)));
        g.add(l + i, i, LaurentPoly::constant(nu_, Rational(1)));
    }
    for (size_t j = 0; j < taus_.size(); ++j)
        g.add(2 * l + j, 2 * l + j, mono(nu_, neg(taus_[j])));
    return g;
}

std::optional<size_t> BlDatum::coset_index(const IVec& v) const {
    for (size_t j = 0; j < taus_.size(); ++j) {
        bool even = true;
        IVec d = sub(v, taus_[j]);
        for (const Int& x : d)
            if (x % 2 != 0) even = false;
        if (even) return j;
    }
    return std::nullopt;
}

IVec BlDatum::slot_weight(size_t p) const {
    const size_t l = static_cast<size_t>(l_);
    if (p < 2 * l) return IVec(nu_, Int(0));
    return taus_[p - 2 * l];
}

std::optional<IVec> BlDatum::degree(const LaurentMatrix& x) const {
    std::optional<IVec> deg;
    for (const auto& [ij, p] : x.entries()) {
        for (const auto& [e, c] : p.terms()) {
            IVec d(nu_, Int(0));
            for (int i = 0; i < nu_; ++i) d[i] = 2 * Int(e[i]);
            d = add(d, slot_weight(ij.first));
            d = sub(d, slot_weight(ij.second));
            if (!deg) deg = d;
            else if (!(*deg == d)) return std::nullopt;
        }
    }
    return deg;
}

bool BlDatum::in_algebra(const LaurentMatrix& x) const {
    return g_inverse() * x.transposed() * g_matrix() == -x;
}

std::vector<LaurentMatrix> bl_root_space(const BlDatum& d, const EarsRoot& root) {
    if (root.is_isotropic()) throw std::invalid_argument("bl_root_space: isotropic root");
    if (!d.ears().contains(root)) throw std::invalid_argument("bl_root_space: not a member");
    const size_t l = static_cast<size_t>(d.l());
    const int nv = d.nu();

    // locate the epsilon pattern of the finite part
    std::vector<int> sign(l, 0);
    for (size_t i = 0; i < l; ++i) {
        if (root.finite[i] == Rational(1)) sign[i] = 1;
        else if (root.finite[i] == Rational(-1)) sign[i] = -1;
    }
    std::vector<size_t> support;
    for (size_t i = 0; i < l; ++i)
        if (sign[i] != 0) support.push_back(i);

    LaurentMatrix x(d.n(), nv);
    if (support.size() == 1) {
        // short root +-e_i at mu in S: X / Xbar with r = coset(mu)
        const size_t i = support[0];
        auto r = d.coset_index(root.lattice);
        if (!r) throw std::logic_error("bl_root_space: lattice part outside S");
        IVec gamma = half(sub(root.lattice, d.taus()[*r]));
        if (sign[i] > 0) {
            x.add(2 * l + *r, l + i, mono(nv, gamma));
            x.add(i, 2 * l + *r, mono(nv, add(gamma, d.taus()[*r]), Rational(-1)));
        } else {
            x.add(2 * l + *r, i, mono(nv, gamma));
            x.add(l + i, 2 * l + *r, mono(nv, add(gamma, d.taus()[*r]), Rational(-1)));
        }
    } else {
        // long root at mu in 2 Z^nu
        const size_t i = support[0], j = support[1];
        IVec gamma = half(root.lattice);
        if (sign[i] > 0 && sign[j] > 0) {
            x.add(i, l + j, mono(nv, gamma));
            x.add(j, l + i, mono(nv, gamma, Rational(-1)));
        } else if (sign[i] < 0 && sign[j] < 0) {
            x.add(l + i, j, mono(nv, gamma));
            x.add(l + j, i, mono(nv, gamma, Rational(-1)));
        } else if (sign[i] > 0 && sign[j] < 0) {
            x.add(i, j, mono(nv, gamma));
            x.add(l + j, l + i, mono(nv, gamma, Rational(-1)));
        } else {
            x.add(j, i, mono(nv, gamma));
            x.add(l + i, l + j, mono(nv, gamma, Rational(-1)));
        }
    }
    return {x};
}

LaurentMatrix bl_bracket(const LaurentMatrix& x, const LaurentMatrix& y) {
    return x * y - y * x;
}

BlIsotropicResult bl_isotropic_dim(const BlDatum& d, const IVec& sigma, int k, int box) {
    if (k == 0) throw std::invalid_argument("bl_isotropic_dim: k = 0");
    bool zero = true;
    for (const Int& x : sigma)
        if (x != 0) zero = false;
    if (zero || !d.ears().isotropic_contains(sigma))
        throw std::invalid_argument("bl_isotropic_dim: sigma is not a nonzero isotropic root");

    BlIsotropicResult out;
    IVec ks = scale(Int(k), sigma);
    bool in_l = true;
    for (const Int& x : ks)
        if (x % 2 != 0) in_l = false;
    out.expected = in_l ? static_cast<size_t>(d.l()) : 1;

    std::vector<LaurentMatrix> produced;
    IVec mu(d.nu(), Int(-box));
    do {
        for (const auto& fin : d.ears().finite().roots()) {
            for (int n = -box - 1; n <= k + box + 1; ++n) {
                EarsRoot a{fin, add(mu, scale(Int(n), sigma))};
                EarsRoot b{qvec_neg(fin), add(neg(mu), scale(Int(k - n), sigma))};
                if (!d.ears().contains(a) || !d.ears().contains(b)) continue;
                auto br = bl_bracket(bl_root_space(d, a)[0], bl_root_space(d, b)[0]);
                if (!br.is_zero()) produced.push_back(br);
            }
        }
    } while ([&] {
        for (size_t i = 0; i < mu.size(); ++i) {
            if (mu[i] < box) {
                mu[i] += 1;
                return true;
            }
            mu[i] = -box;
        }
        return false;
    }());
    out.brackets_used = produced.size();

    // flatten to rational coordinate rows over (matrix slot, monomial)
    std::map<std::tuple<size_t, size_t, LaurentPoly::Exponent>, size_t> columns;
    for (const auto& x : produced)
        for (const auto& [ij, p] : x.entries())
            for (const auto& [e, c] : p.terms())
                columns.try_emplace({ij.first, ij.second, e}, columns.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& x : produced) {
        std::vector<Rational> row(columns.size(), Rational(0));
        for (const auto& [ij, p] : x.entries())
            for (const auto& [e, c] : p.terms())
                row[columns.at({ij.first, ij.second, e})] = c;
        rows.push_back(std::move(row));
    }
    out.dim = rows.empty() ? 0 : exact_rank(ExactMatrix<Rational>::from_rows(rows));
    return out;
}

} // namespace ears
