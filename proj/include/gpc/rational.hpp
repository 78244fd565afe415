#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gpc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0, gcd(|num|, den) = 1.
/// The integer backbone is arbitrary precision, so coefficient growth in nested
/// bracket expressions never overflows.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Accepts "p" and "p/q" with an optional leading '-'.
    static Rational parse(std::string_view text);

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::string_view rest = text;
    bool neg = false;
    if (rest.front() == '-' || rest.front() == '+') {
        neg = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) bad();
    auto digits = [&](std::string_view s) {
        if (s.empty()) bad();
        for (char c : s)
            if (c < '0' || c > '9') bad();
        return BigInt(std::string(s));
    };
    auto slash = rest.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        num = digits(rest);
    } else {
        num = digits(rest.substr(0, slash));
        den = digits(rest.substr(slash + 1));
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace gpc
