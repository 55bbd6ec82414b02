#ifndef CRAMER_LGV_RATIONAL_HPP
#define CRAMER_LGV_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cramer_lgv {

/**
 * Exact fraction backed by GMP. The value is always kept in lowest terms
 * with a positive denominator, so structural equality is value equality.
 *
 * The textual form is "p" for integers and "p/q" otherwise; parse() accepts
 * exactly that grammar (plus non-reduced fractions) and nothing else, in
 * particular no decimal points or exponents.
 */
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : value_(static_cast<unsigned long>(value)) {}

    Rational(long numerator, long denominator);

    explicit Rational(mpq_class value);

    static Rational parse(std::string_view text);

    std::string to_string() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_RATIONAL_HPP
