#pragma once

#include "ears/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ears {

/// Element of the cyclotomic field Q(w), w a primitive m-th root of unity,
/// for m prime (or m = 1, where the field degenerates to Q). Coefficients
/// are stored on the power basis 1, w, ..., w^{m-2}; arithmetic is reduced
/// modulo the minimal polynomial 1 + w + ... + w^{m-1}.
class Cyc {
public:
    Cyc() : m_(1), c_(1) {}

    explicit Cyc(int m) : m_(m), c_(degree(m)) { check_order(m); }

    Cyc(int m, const Rational& rational_part) : Cyc(m) { c_[0] = rational_part; }

    /// The coefficient vector must have length m-1 (length 1 for m = 1).
    Cyc(int m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
        check_order(m);
        if (c_.size() != static_cast<size_t>(degree(m)))
            throw std::invalid_argument("Cyc: coefficient vector has wrong length");
    }

    /// w itself. For m = 2 this is -1; for m = 1 it is 1.
    static Cyc omega(int m) {
        Cyc z(m);
        if (m == 1) z.c_[0] = 1;
        else if (m == 2) z.c_[0] = -1;
        else z.c_[1] = 1;
        return z;
    }

    /// w^k, k reduced mod m.
    static Cyc omega_pow(int m, long long k) {
        Cyc z(m);
        long long r = ((k % m) + m) % m;
        if (m == 1) { z.c_[0] = 1; return z; }
        if (r < m - 1) { z.c_[static_cast<size_t>(r)] = 1; return z; }
        // w^{m-1} = -(1 + w + ... + w^{m-2})
        for (auto& ci : z.c_) ci = -1;
        return z;
    }

    int order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& ci : c_)
            if (!ci.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    /// Valid only when is_rational().
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyc: not a rational value");
        return c_[0];
    }

    Cyc operator-() const {
        Cyc r = *this;
        for (auto& ci : r.c_) ci = -ci;
        return r;
    }

    Cyc& operator+=(const Cyc& o) {
        check_same(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyc& operator-=(const Cyc& o) { return *this += -o; }

    Cyc& operator*=(const Cyc& o) {
        check_same(o);
        *this = mul(*this, o);
        return *this;
    }

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b) { a.check_same(b); return mul(a, b); }
    friend Cyc operator*(const Rational& s, Cyc a) {
        for (auto& ci : a.c_) ci *= s;
        return a;
    }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Galois conjugation w -> w^{-1}; an involution fixing Q.
    Cyc conjugate() const {
        Cyc r(m_);
        for (size_t e = 0; e < c_.size(); ++e) {
            if (c_[e].is_zero()) continue;
            r += c_[e] * omega_pow(m_, -static_cast<long long>(e));
        }
        return r;
    }

    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
        const size_t d = c_.size();
        // Solve (this) * x = 1 by Gaussian elimination on the multiplication
        // matrix over the power basis.
        std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1));
        for (size_t j = 0; j < d; ++j) {
            Cyc col = mul(*this, basis_vector(m_, j));
            for (size_t i = 0; i < d; ++i) aug[i][j] = col.c_[i];
        }
        aug[0][d] = 1;
        for (size_t col = 0, row = 0; col < d && row < d; ++col) {
            size_t piv = row;
            while (piv < d && aug[piv][col].is_zero()) ++piv;
            if (piv == d) continue;
            std::swap(aug[piv], aug[row]);
            Rational inv = aug[row][col].inverse();
            for (size_t j = col; j <= d; ++j) aug[row][j] *= inv;
            for (size_t i = 0; i < d; ++i) {
                if (i == row || aug[i][col].is_zero()) continue;
                Rational f = aug[i][col];
                for (size_t j = col; j <= d; ++j) aug[i][j] -= f * aug[row][j];
            }
            ++row;
        }
        Cyc x(m_);
        for (size_t i = 0; i < d; ++i) x.c_[i] = aug[i][d];
        if (mul(*this, x) != Cyc(m_, Rational(1)))
            throw std::logic_error("Cyc: inverse failed");   // cannot happen in a field
        return x;
    }

    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    /// "1 - 2w" style rendering on the power basis.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string term = c_[i].str();
            if (i > 0) {
                if (term == "1") term = "";
                else if (term == "-1") term = "-";
                term += "w";
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }

private:
    static int degree(int m) { return m <= 2 ? 1 : m - 1; }

    static void check_order(int m) {
        if (m == 1 || m == 2) return;
        if (m < 2) throw std::invalid_argument("Cyc: order must be positive");
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) throw std::invalid_argument("Cyc: only prime orders supported");
    }

    void check_same(const Cyc& o) const {
        if (m_ != o.m_) throw std::invalid_argument("Cyc: mismatched cyclotomic orders");
    }

    static Cyc basis_vector(int m, size_t j) {
        Cyc z(m);
        z.c_[j] = 1;
        return z;
    }

    static Cyc mul(const Cyc& a, const Cyc& b) {
        const int m = a.m_;
        if (m == 1) return Cyc(m, a.c_[0] * b.c_[0]);
        // Convolve into exponents 0..2m-4, wrap mod m, then eliminate w^{m-1}.
        std::vector<Rational> acc(static_cast<size_t>(m), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                acc[(i + j) % static_cast<size_t>(m)] += a.c_[i] * b.c_[j];
            }
        }
        Cyc r(m);
        const Rational& top = acc[static_cast<size_t>(m - 1)];
        for (size_t i = 0; i + 1 < static_cast<size_t>(m); ++i) r.c_[i] = acc[i] - top;
        return r;
    }

    int m_;
    std::vector<Rational> c_;
};

} // namespace ears
