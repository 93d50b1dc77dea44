#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dbell {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    /// Accepts "p", "-p" or "p/q" with q != 0. The result is reduced.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    /// Always "p/q", denominators of 1 included.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    Rational pow(unsigned exponent) const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned n);

} // namespace dbell
