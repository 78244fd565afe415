#pragma once

#include "gpc/errors.hpp"
#include "gpc/rational.hpp"

#include <string>
#include <utility>

namespace gpc {

/// Split-complex number re + e*im over the exact rationals, with e*e = 1.
/// The ring has zero divisors; the idempotents e± = (1±e)/2 decompose it into
/// two real "light-cone" lines, which is how spans over this ring are handled.
struct SplitComplex {
    Rational re;
    Rational im;

    SplitComplex() = default;
    SplitComplex(long long n) : re(n), im(0) {}
    SplitComplex(Rational r) : re(std::move(r)), im(0) {}
    SplitComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static SplitComplex e() { return SplitComplex(Rational(0), Rational(1)); }
    static SplitComplex e_plus() { return SplitComplex(Rational(1, 2), Rational(1, 2)); }
    static SplitComplex e_minus() { return SplitComplex(Rational(1, 2), Rational(-1, 2)); }

    /// Light-cone coordinates: x = e+*plus(x) + e-*minus(x).
    Rational plus() const { return re + im; }
    Rational minus() const { return re - im; }
    static SplitComplex from_lightcone(const Rational& p, const Rational& m) {
        return SplitComplex((p + m) * Rational(1, 2), (p - m) * Rational(1, 2));
    }

    SplitComplex conjugate() const { return SplitComplex(re, -im); }
    Rational modulus_sq() const { return re * re - im * im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend SplitComplex operator+(const SplitComplex& a, const SplitComplex& b) {
        return SplitComplex(a.re + b.re, a.im + b.im);
    }
    friend SplitComplex operator-(const SplitComplex& a, const SplitComplex& b) {
        return SplitComplex(a.re - b.re, a.im - b.im);
    }
    friend SplitComplex operator*(const SplitComplex& a, const SplitComplex& b) {
        return SplitComplex(a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re);
    }
    /// Defined only when the modulus a*conj(a) is invertible (x off the light cone).
    friend SplitComplex operator/(const SplitComplex& a, const SplitComplex& b) {
        Rational m = b.modulus_sq();
        if (m.is_zero()) throw std::domain_error("split-complex division by a zero divisor");
        SplitComplex num = a * b.conjugate();
        return SplitComplex(num.re / m, num.im / m);
    }
    SplitComplex operator-() const { return SplitComplex(-re, -im); }
    SplitComplex& operator+=(const SplitComplex& o) { return *this = *this + o; }
    SplitComplex& operator-=(const SplitComplex& o) { return *this = *this - o; }
    SplitComplex& operator*=(const SplitComplex& o) { return *this = *this * o; }
    SplitComplex& operator/=(const SplitComplex& o) { return *this = *this / o; }

    friend bool operator==(const SplitComplex& a, const SplitComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const SplitComplex& a, const SplitComplex& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string i = im.abs().is_one() ? "e" : "e*" + im.abs().str();
        if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + i;
        return re.str() + (im.sign() < 0 ? " - " : " + ") + i;
    }
};

inline std::ostream& operator<<(std::ostream& os, const SplitComplex& x) { return os << x.str(); }

/// Exact rational point on the unit hyperbola c^2 - s^2 = 1, c >= 1.
/// Stands in for (cosh, sinh) of a hyperbolic angle.
struct HyperbolicPoint {
    Rational c;
    Rational s;

    HyperbolicPoint() : c(1), s(0) {}
    HyperbolicPoint(Rational c_, Rational s_) : c(std::move(c_)), s(std::move(s_)) {
        if (c * c - s * s != Rational(1) || c < Rational(1))
            throw std::invalid_argument("(" + c.str() + ", " + s.str() + ") is not on the unit hyperbola branch c >= 1");
    }
};

/// Rational parametrization c = (1+t^2)/(1-t^2), s = 2t/(1-t^2) of the hyperbola.
/// |t| > 1 lands on the left branch, which is folded back by negating both
/// coordinates (t and 1/t give the same point). t = +-1 is the light cone.
inline HyperbolicPoint hyperbolic_point(const Rational& t) {
    Rational t2 = t * t;
    if (t2 == Rational(1)) throw DegenerateParameter("hyperbolic parameter t with t^2 = 1");
    Rational d = Rational(1) - t2;
    Rational c = (Rational(1) + t2) / d;
    Rational s = (Rational(2) * t) / d;
    if (c < Rational(0)) {
        c = -c;
        s = -s;
    }
    return HyperbolicPoint(c, s);
}

} // namespace gpc
