#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ears {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Canonical form: denominator > 0, gcd(num, den) = 1,
/// zero stored as 0/1. Backed by boost::multiprecision, so no overflow ever.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(checked(num, den)) {}
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    const Int numerator() const { return boost::multiprecision::numerator(v_); }
    const Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    /// Prints "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    static boost::multiprecision::cpp_rational checked(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) return boost::multiprecision::cpp_rational(-num, -den);
        return boost::multiprecision::cpp_rational(num, den);
    }

    boost::multiprecision::cpp_rational v_;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

} // namespace ears
