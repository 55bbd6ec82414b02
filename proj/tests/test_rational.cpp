#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cramer_lgv/errors.hpp"
#include "cramer_lgv/rational.hpp"

using cramer_lgv::Error;
using cramer_lgv::ErrorCode;
using cramer_lgv::Rational;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("values are stored reduced with a positive denominator") {
    const Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(r.to_string() == "-3/4");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0, -5).to_string() == "0");
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("parse accepts integers and fractions only") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("10/4").to_string() == "5/2");
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");

    for (const char* bad : {"", "-", "1.5", "1e3", " 1", "1 ", "+1", "1/-2", "a", "1/", "/2", "--1", "1/2/3"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { (void)Rational::parse(bad); }) == ErrorCode::ParseError);
    }
    CHECK(code_of([] { (void)Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(2, 3) * Rational(3, 5) == Rational(2, 5));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(3, 4) / Rational(-9, 8) == Rational(-2, 3));
    CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::DivisionByZero);
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("field identities hold on random fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}
