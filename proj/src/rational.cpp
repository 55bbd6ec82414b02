#include "cramer_lgv/rational.hpp"

#include <algorithm>
#include <ostream>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(ErrorCode::ParseError,
                "invalid rational literal \"" + std::string(text) + "\" (expected integer or p/q)");
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        bad_literal(text);
    }
    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero,
                    "rational literal \"" + std::string(text) + "\" has zero denominator");
    }
    if (negative) {
        num = -num;
    }
    mpq_class q(num, den);
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str(10);
    }
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cramer_lgv
