#pragma once

#include "ears/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ears {

/// Sparse multivariate Laurent polynomial over Q in a fixed number of
/// variables t1..tn. Terms are keyed by exponent vectors in Z^n; zero
/// coefficients are never stored. Term order is lexicographic on the
/// exponent vector, which makes printing canonical.
class LaurentPoly {
public:
    using Exponent = std::vector<long long>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly monomial(const Exponent& e, const Rational& c) {
        LaurentPoly p(static_cast<int>(e.size()));
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    static LaurentPoly constant(int nvars, const Rational& c) {
        return monomial(Exponent(static_cast<size_t>(nvars), 0), c);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("LaurentPoly: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same(b);
        LaurentPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
        if (s.is_zero()) return LaurentPoly(a.nvars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact division: requires that d divides *this in the Laurent ring.
    /// Reduction by the lex-leading term of d terminates exactly when the
    /// division is exact, which is the only case Bareiss elimination needs.
    LaurentPoly divide_exact(const LaurentPoly& d) const {
        check_same(d);
        if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        LaurentPoly rem = *this, quot(nvars_);
        const auto& [de, dc] = *d.terms_.rbegin();   // lex-greatest term of d
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exponent q(re);
            for (size_t i = 0; i < q.size(); ++i) q[i] -= de[i];
            LaurentPoly t = monomial(q, rc / dc);
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    /// Canonical text form, e.g. "2*t1^2*t2^-1 - 1/3". Terms in descending
    /// lex order of exponents.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool unit_exp = true;
            for (long long x : e)
                if (x != 0) unit_exp = false;
            std::string term;
            if (unit_exp) {
                term = c.str();
            } else {
                if (c == Rational(-1)) term = "-";
                else if (c != Rational(1)) term = c.str() + "*";
                bool first = true;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (!first) term += "*";
                    first = false;
                    term += "t" + std::to_string(i + 1);
                    if (e[i] != 1) term += "^" + std::to_string(e[i]);
                }
            }
            if (!out.empty()) out += (term[0] == '-') ? " - " : " + ";
            if (!out.empty() && term[0] == '-') term = term.substr(1);
            out += term;
        }
        return out;
    }

private:
    void check_same(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("LaurentPoly: mismatched variable counts");
    }

    int nvars_;
    std::map<Exponent, Rational> terms_;
};

} // namespace ears
