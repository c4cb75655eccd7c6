#include "ears/realize_tkk.hpp"

#include <stdexcept>

namespace ears {

namespace {

bool ivec_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool next_point(IVec& p, int box) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < box) {
            p[i] += 1;
            return true;
        }
        p[i] = -box;
    }
    return false;
}

} // namespace

JordanDatum::JordanDatum(int nu, std::vector<IVec> taus)
    : nu_(nu), taus_(std::move(taus)),
      s_(Lattice::standard(nu), taus_),
      r0_(sumset_cosets(s_, s_)) {
    if (taus_.empty() || !ivec_zero(taus_[0]))
        throw std::invalid_argument("JordanDatum: need tau_0 = 0 first");
    auto bad = s_.validate();
    if (!bad.empty()) throw std::invalid_argument("JordanDatum: " + bad.front());
}

std::optional<size_t> JordanDatum::coset_index(const IVec& v) const {
    for (size_t j = 0; j < taus_.size(); ++j) {
        bool even = true;
        IVec d = sub(v, taus_[j]);
        for (const Int& x : d)
            if (x % 2 != 0) even = false;
        if (even) return j;
    }
    return std::nullopt;
}

bool JordanDatum::gamma(const IVec& a, const IVec& b) const {
    auto ia = coset_index(a), ib = coset_index(b);
    if (!ia || !ib) return false;
    return *ia == *ib || *ia == 0 || *ib == 0;
}

std::vector<IVec> JordanDatum::s_points(int box) const {
    std::vector<IVec> out;
    IVec p(nu_, Int(-box));
    do {
        if (in_s(p)) out.push_back(p);
    } while (next_point(p, box));
    return out;
}

JordanElement JordanElement::monomial(const JordanDatum& d, const IVec& exp,
                                      const Rational& c) {
    JordanElement e(&d);
    e.add_term(exp, c);
    return e;
}

void JordanElement::add_term(const IVec& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != d_->nu())
        throw std::invalid_argument("JordanElement: exponent rank mismatch");
    if (c.is_zero() || !d_->in_s(exp)) return;   // x^sigma = 0 outside S
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JordanElement JordanElement::operator-() const {
    JordanElement r(d_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

JordanElement operator+(const JordanElement& a, const JordanElement& b) {
    JordanElement r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

JordanElement operator-(const JordanElement& a, const JordanElement& b) { return a + (-b); }

bool operator==(const JordanElement& a, const JordanElement& b) {
    return a.terms_ == b.terms_;
}

JordanElement jordan_mul(const JordanElement& x, const JordanElement& y) {
    const JordanDatum& d = x.datum();
    JordanElement r(&d);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            if (d.gamma(a, b)) r.add_term(add(a, b), ca * cb);
    return r;
}

TkkOperator TkkOperator::mul(const JordanElement& x) {
    TkkOperator op(&x.datum());
    op.mul_terms_.emplace_back(Rational(1), x);
    return op;
}

TkkOperator TkkOperator::commutator(const JordanElement& a, const JordanElement& b) {
    TkkOperator op(&a.datum());
    op.comm_terms_.emplace_back(Rational(1), a, b);
    return op;
}

TkkOperator TkkOperator::operator-() const {
    TkkOperator r(d_);
    for (const auto& [c, x] : mul_terms_) r.mul_terms_.emplace_back(-c, x);
    for (const auto& [c, a, b] : comm_terms_) r.comm_terms_.emplace_back(-c, a, b);
    return r;
}

TkkOperator operator+(const TkkOperator& a, const TkkOperator& b) {
    TkkOperator r = a;
    for (const auto& t : b.mul_terms_) r.mul_terms_.push_back(t);
    for (const auto& t : b.comm_terms_) r.comm_terms_.push_back(t);
    return r;
}

JordanElement TkkOperator::apply(const JordanElement& v) const {
    JordanElement out(d_);
    for (const auto& [c, x] : mul_terms_) {
        JordanElement term = jordan_mul(x, v);
        for (const auto& [e, cc] : term.terms()) out.add_term(e, c * cc);
    }
    for (const auto& [c, a, b] : comm_terms_) {
        JordanElement term = jordan_mul(a, jordan_mul(b, v)) - jordan_mul(b, jordan_mul(a, v));
        for (const auto& [e, cc] : term.terms()) out.add_term(e, c * cc);
    }
    return out;
}

JordanElement TkkOperator::apply_monomial(const IVec& gamma) const {
    return apply(JordanElement::monomial(*d_, gamma));
}

bool TkkOperator::is_zero_on(int box) const {
    for (const auto& gamma : d_->s_points(box))
        if (!apply_monomial(gamma).is_zero()) return false;
    return true;
}

bool tkk_ops_equal(const TkkOperator& a, const TkkOperator& b, int box) {
    for (const auto& gamma : a.datum().s_points(box))
        if (!(a.apply_monomial(gamma) == b.apply_monomial(gamma))) return false;
    return true;
}

TkkBracketResult tkk_bracket_class(const JordanDatum& d, size_t i, const IVec& sigma, int n,
                                   int n_prime, int box) {
    if (i >= d.taus().size()) throw std::invalid_argument("tkk_bracket_class: bad coset index");
    if (ivec_zero(sigma) || !d.in_r0(sigma))
        throw std::invalid_argument("tkk_bracket_class: sigma must be a nonzero isotropic root");
    const IVec lambda_i = d.taus()[i];
    if (!d.in_s(add(lambda_i, sigma)))
        throw std::invalid_argument("tkk_bracket_class: lambda_i + sigma must lie in S");
    const int t = n + n_prime;
    const IVec xe = add(lambda_i, scale(Int(n), sigma));
    const IVec ye = add(neg(lambda_i), scale(Int(n_prime), sigma));
    if (!d.in_s(xe) || !d.in_s(ye))
        throw std::invalid_argument("tkk_bracket_class: exponent outside S");

    JordanElement x = JordanElement::monomial(d, xe);
    JordanElement y = JordanElement::monomial(d, ye);

    // direct evaluation: [x, ybar] = x /\ y = L_{x y} + [L_x, L_y]
    TkkOperator direct = TkkOperator::mul(jordan_mul(x, y)) + TkkOperator::commutator(x, y);

    auto sigma_idx = d.coset_index(sigma);
    const bool sigma_compatible = sigma_idx && (*sigma_idx == 0 || *sigma_idx == i);
    TkkBracketResult out{TkkBracketCase::Multiplication, TkkOperator(&d), direct, 0, false,
                         false};
    if (i == 0 || t % 2 == 0 || sigma_compatible) {
        out.bracket_case = TkkBracketCase::Multiplication;
        out.formula = TkkOperator::mul(JordanElement::monomial(d, scale(Int(t), sigma)));
        out.agrees = tkk_ops_equal(out.formula, direct, box);
        out.observed_sign = out.agrees ? 1 : 0;
    } else {
        out.bracket_case = TkkBracketCase::Commutator;
        JordanElement a = JordanElement::monomial(d, add(lambda_i, scale(Int(t - 1), sigma)));
        JordanElement b = JordanElement::monomial(d, add(neg(lambda_i), sigma));
        out.formula = TkkOperator::commutator(a, b);
        if (tkk_ops_equal(out.formula, direct, box)) {
            out.agrees = true;
            out.observed_sign = 1;
        } else if (tkk_ops_equal(-out.formula, direct, box)) {
            out.agrees = true;
            out.observed_sign = -1;
        }
    }
    out.nonzero = !direct.is_zero_on(box);
    return out;
}

TkkIdentityReport rokn3_check(const JordanDatum& d, int box) {
    TkkIdentityReport rep;
    auto note = [&](const std::string& name, const std::string& what) {
        rep.checks.emplace_back(name, what);
    };
    auto fail = [&](const std::string& what) { rep.violations.push_back(what); };
    const size_t m = d.taus().size();

    // Gamma table values on coset representatives
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (!d.gamma(d.taus()[0], add(d.taus()[0], d.taus()[i])))
                fail("Gamma(S_0, S_0 + S_i) != 1 at i=" + std::to_string(i));
            if (!d.gamma(d.taus()[i], add(d.taus()[j], d.taus()[j])))
                fail("Gamma(S_i, S_j + S_j) != 1 at i=" + std::to_string(i) +
                     ", j=" + std::to_string(j));
            if (!d.gamma(d.taus()[i], add(d.taus()[0], d.taus()[i])))
                fail("Gamma(S_i, S_0 + S_i) != 1 at i=" + std::to_string(i));
        }
    }
    note("gamma-table", "checked on all coset representatives");

    const auto pts = d.s_points(box);

    // x^a (x^b x^c) = Gamma(b,c) Gamma(a, b+c) x^{a+b+c}
    {
        size_t checked = 0;
        for (const auto& a : pts)
            for (const auto& b : pts)
                for (const auto& c : pts) {
                    ++checked;
                    auto lhs = jordan_mul(JordanElement::monomial(d, a),
                                          jordan_mul(JordanElement::monomial(d, b),
                                                     JordanElement::monomial(d, c)));
                    JordanElement rhs(&d);
                    if (d.gamma(b, c) && d.gamma(a, add(b, c)))
                        rhs.add_term(add(a, add(b, c)), Rational(1));
                    if (!(lhs == rhs))
                        fail("triple product law fails at " + ivec_str(a) + "," + ivec_str(b) +
                             "," + ivec_str(c));
                }
        note("triple-product", std::to_string(checked) + " monomial triples");
    }

    // [L_sigma, L_tau] x^gamma = 0 when sigma, tau, or gamma lies in S_0
    {
        size_t checked = 0;
        for (const auto& s : pts)
            for (const auto& t : pts) {
                auto op = TkkOperator::commutator(JordanElement::monomial(d, s),
                                                  JordanElement::monomial(d, t));
                bool s0 = d.coset_index(s) == size_t{0}, t0 = d.coset_index(t) == size_t{0};
                for (const auto& g : pts) {
                    bool g0 = d.coset_index(g) == size_t{0};
                    if (!s0 && !t0 && !g0) continue;
                    ++checked;
                    if (!op.apply_monomial(g).is_zero())
                        fail("[L,L] does not kill " + ivec_str(g) + " for " + ivec_str(s) +
                             "," + ivec_str(t));
                }
            }
        note("kill-S0", std::to_string(checked) + " evaluations");
    }

    // [L_sigma, L_tau] = 0 for sigma, tau in a common coset
    {
        size_t checked = 0;
        for (const auto& s : pts)
            for (const auto& t : pts) {
                if (d.coset_index(s) != d.coset_index(t)) continue;
                ++checked;
                auto op = TkkOperator::commutator(JordanElement::monomial(d, s),
                                                  JordanElement::monomial(d, t));
                if (!op.is_zero_on(box))
                    fail("[L,L] != 0 for same-coset pair " + ivec_str(s) + "," + ivec_str(t));
            }
        note("same-coset", std::to_string(checked) + " pairs");
    }

    // shift identity with j = coset of tau:
    // [L_{x^sigma}, L_{x^tau}] = [L_{x^{sigma+tau+tau_j}}, L_{x^{-tau_j}}]
    {
        size_t checked = 0;
        for (const auto& s : pts)
            for (const auto& t : pts) {
                auto j = d.coset_index(t);
                ++checked;
                auto lhs = TkkOperator::commutator(JordanElement::monomial(d, s),
                                                   JordanElement::monomial(d, t));
                auto rhs = TkkOperator::commutator(
                    JordanElement::monomial(d, add(add(s, t), d.taus()[*j])),
                    JordanElement::monomial(d, neg(d.taus()[*j])));
                if (!tkk_ops_equal(lhs, rhs, box))
                    fail("shift identity fails at " + ivec_str(s) + "," + ivec_str(t));
            }
        note("shift", std::to_string(checked) + " pairs, j = coset of the second factor");
    }
    return rep;
}

} // namespace ears
