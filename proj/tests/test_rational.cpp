#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "idealproj/errors.hpp"
#include "idealproj/rational.hpp"
#include "test_util.hpp"

using idealproj::ParseError;
using idealproj::Rational;
using idealproj::ValidationError;

TEST_CASE("construction canonicalizes sign and gcd") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational().str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("14/6") == Rational(7, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
}

TEST_CASE("parse rejects malformed input with 1-based positions") {
    auto fails_at = [](const std::string& text, const std::string& fragment) {
        return testutil::throws_containing<ParseError>(
            [&text] { Rational::parse(text); }, fragment);
    };
    CHECK(fails_at("", "(at position 1)"));
    CHECK(fails_at("abc", "(at position 1)"));
    CHECK(fails_at("1/", "(at position 3)"));
    CHECK(fails_at("1/0", "zero"));
    CHECK(fails_at("1/-2", "(at position 3)"));
    CHECK(fails_at("1/2x", "(at position 4)"));
    CHECK(fails_at("1 / 2", "(at position 2)"));
    CHECK(fails_at("--3", "(at position 2)"));
}

TEST_CASE("str and parse round-trip") {
    testutil::Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational r = rng.rational(50, 37);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field operations satisfy ring laws") {
    testutil::Rng rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = rng.rational(9, 7);
        const Rational b = rng.rational(9, 7);
        const Rational c = rng.rational(9, 7);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        CHECK(a * Rational(1) == a);
        CHECK(a + Rational(0) == a);
        CHECK(-(-a) == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("compound assignment matches binary forms") {
    Rational a(3, 4);
    Rational b = a;
    b += Rational(1, 4);
    CHECK(b == Rational(1));
    b -= Rational(1, 2);
    CHECK(b == Rational(1, 2));
    b *= Rational(4);
    CHECK(b == Rational(2));
    b /= Rational(-8, 3);
    CHECK(b == Rational(-3, 4));
    CHECK_THROWS_AS(a / Rational(0), ValidationError);
    CHECK_THROWS_AS(a /= Rational(0), ValidationError);
}

TEST_CASE("comparisons order by value") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(7) >= Rational(7));
    CHECK(Rational(1, 3) != Rational(2, 3));
    CHECK(min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(max(Rational(-5), Rational(-6)) == Rational(-5));
}

TEST_CASE("sign, abs, and zero predicates") {
    CHECK(Rational(0).is_zero());
    CHECK(!Rational(1, 9).is_zero());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(3, 7).abs() == Rational(3, 7));
}

TEST_CASE("pow handles positive, zero, and negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), ValidationError);
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    // exact powers stay exact well past machine precision
    CHECK(Rational(1, 10).pow(25).str() == "1/10000000000000000000000000");
}

TEST_CASE("numerator, denominator, and conversions") {
    const Rational r(-6, 8);
    CHECK(r.numerator() == mpz_class(-3));
    CHECK(r.denominator() == mpz_class(4));
    CHECK(r.is_integer() == false);
    CHECK(Rational(12, 4).is_integer());
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
}
