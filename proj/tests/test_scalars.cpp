#include "gpc/scalars.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace gpc;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);

    // normalizing twice equals normalizing once
    Rational once(42, -98);
    Rational twice(once.num(), once.den());
    CHECK(once == twice);

    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("-13/12").str() == "-13/12");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("4/8").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational field arithmetic is exact") {
    testing::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("hyperbolic point values") {
    // substitute into the parametrization with independent rational arithmetic
    auto oracle = [](long long tn, long long td) {
        Rational t{BigInt(tn), BigInt(td)};
        Rational c = (Rational(1) + t * t) / (Rational(1) - t * t);
        Rational s = (Rational(2) * t) / (Rational(1) - t * t);
        REQUIRE(c * c - s * s == Rational(1));
        return std::pair{c, s};
    };

    HyperbolicPoint zero = hyperbolic_point(Rational(0));
    CHECK(zero.c == Rational(1));
    CHECK(zero.s == Rational(0));

    auto [c_half, s_half] = oracle(1, 2);
    HyperbolicPoint half = hyperbolic_point(Rational(1, 2));
    CHECK(half.c == c_half);
    CHECK(half.s == s_half);
    CHECK(half.c == Rational(5, 3));
    CHECK(half.s == Rational(4, 3));

    auto [c_third, s_third] = oracle(1, 3);
    HyperbolicPoint third = hyperbolic_point(Rational(1, 3));
    CHECK(third.c == c_third);
    CHECK(third.s == s_third);
    CHECK(third.c == Rational(5, 4));
    CHECK(third.s == Rational(3, 4));

    CHECK_THROWS_AS(hyperbolic_point(Rational(1)), DegenerateParameter);
    CHECK_THROWS_AS(hyperbolic_point(Rational(-1)), DegenerateParameter);

    // |t| > 1 folds to the right branch; t and 1/t give the same point
    HyperbolicPoint two = hyperbolic_point(Rational(2));
    CHECK(two.c == half.c);
    CHECK(two.s == half.s);
    CHECK(two.c >= Rational(1));
}

TEST_CASE("hyperbolic point invariant is enforced") {
    CHECK_THROWS_AS(HyperbolicPoint(Rational(2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(HyperbolicPoint(Rational(-1), Rational(0)), std::invalid_argument);
}

TEST_CASE("split-complex multiplication") {
    const SplitComplex e = SplitComplex::e();
    CHECK(e * e == SplitComplex(1));
    CHECK((SplitComplex(1) + e) * (SplitComplex(1) - e) == SplitComplex(0));

    // modulus of r(c + e s) for a hyperbolic point is r^2
    testing::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        Rational t = rng.rational(4, 5);
        if ((t * t) == Rational(1)) continue;
        Rational r = rng.rational();
        HyperbolicPoint hp = hyperbolic_point(t);
        SplitComplex x(r * hp.c, r * hp.s);
        CHECK(x.modulus_sq() == r * r);
    }
}

TEST_CASE("split-complex ring properties") {
    testing::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        SplitComplex x = rng.split(), y = rng.split(), z = rng.split();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x.modulus_sq() * y.modulus_sq() == (x * y).modulus_sq());

        // light-cone decomposition round-trip
        CHECK(SplitComplex::from_lightcone(x.plus(), x.minus()) == x);
        CHECK(SplitComplex::e_plus() * SplitComplex(x.plus()) +
                  SplitComplex::e_minus() * SplitComplex(x.minus()) ==
              x);
    }

    // idempotents
    const SplitComplex ep = SplitComplex::e_plus(), em = SplitComplex::e_minus();
    CHECK(ep * ep == ep);
    CHECK(em * em == em);
    CHECK(ep * em == SplitComplex(0));
    CHECK(ep + em == SplitComplex(1));
}

TEST_CASE("split-complex conjugation and division") {
    SplitComplex x(Rational(3), Rational(2));
    CHECK(x.conjugate() == SplitComplex(Rational(3), Rational(-2)));
    CHECK(x * x.conjugate() == SplitComplex(x.modulus_sq()));
    CHECK(x / x == SplitComplex(1));
    CHECK_THROWS_AS(x / (SplitComplex(1) + SplitComplex::e()), std::domain_error);
}
