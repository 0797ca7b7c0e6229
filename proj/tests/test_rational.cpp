#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using bezout::Error;
using bezout::Rational;
using R = Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator", "[rational]") {
    CHECK(R(2, 4) == R(1, 2));
    CHECK(R(-4, 6) == R(-2, 3));
    CHECK(R(3, -9) == R(-1, 3));
    CHECK(R(3, -9).den() == 3);
    CHECK(R(0, 7) == R(0));
    CHECK(R(0, 7).den() == 1);
}

TEST_CASE("zero denominators are constructor errors", "[rational]") {
    CHECK_THROWS_MATCHES(R(1, 0), Error, Catch::Matchers::MessageMatches(
                                              Catch::Matchers::StartsWith("DivisionByZero")));
    CHECK_THROWS_AS(R(1) / R(0), Error);
}

TEST_CASE("field operations are exact", "[rational]") {
    CHECK(R(1, 3) + R(1, 6) == R(1, 2));
    CHECK(R(19, 6) * R(6, 19) == R(1));
    CHECK(R(1, 10) + R(2, 10) == R(3, 10)); // no 0.1 + 0.2 drama
    CHECK(R(7, 3) - R(7, 3) == R(0));
    CHECK(-R(5, 4) == R(-5, 4));

    testsupport::Rng rng(20240811);
    for (int i = 0; i < 200; ++i) {
        const R a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        if (!c.is_zero()) CHECK(a / c * c == a);
    }
}

TEST_CASE("ordering compares by value", "[rational]") {
    CHECK(R(1, 3) < R(1, 2));
    CHECK(R(-1, 2) < R(-1, 3));
    CHECK(R(7, 16) <= R(7, 16));
    CHECK(R(5, 2).abs() == R(5, 2));
    CHECK(R(-5, 2).abs() == R(5, 2));
}

TEST_CASE("string round trips", "[rational]") {
    CHECK(R::parse("19/6") == R(19, 6));
    CHECK(R::parse("-7/16") == R(-7, 16));
    CHECK(R::parse("42") == R(42));
    CHECK(R::parse("-0") == R(0));
    CHECK(R::parse("2/4").str() == "1/2");
    CHECK(R::parse("0.5") == R(1, 2));
    CHECK(R::parse("-1.25") == R(-5, 4));
    CHECK(R(19, 6).str() == "19/6");
    CHECK(R(-3).str() == "-3");

    testsupport::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const R a = rng.rational(1000);
        CHECK(R::parse(a.str()) == a);
    }
}

TEST_CASE("parse rejects malformed strings", "[rational]") {
    for (const char* bad : {"", "1/", "/2", "1/0", "1//2", "a", "1.2.3", "1e3", "2 /3", "--1"}) {
        INFO(bad);
        CHECK_THROWS_AS(R::parse(bad), Error);
    }
}
