#include <dbell/rational.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dbell {

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw std::domain_error("Rational::from_double: non-finite value");
    }
    return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto parse_int = [](std::string_view digits) {
        const auto body = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? digits.substr(1) : digits;
        if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("Rational::parse: malformed integer '" + std::string(digits) + "'");
        }
        // mpz_class rejects a leading '+'
        return BigInt(std::string(digits[0] == '+' ? digits.substr(1) : digits), 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("Rational::parse: denominator must be positive");
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

long double Rational::to_long_double() const
{
    // Split into integer part and remainder so that large numerators or
    // denominators do not overflow the intermediate doubles.
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    const mpq_class frac(r, value_.get_den());
    return static_cast<long double>(q.get_d()) + static_cast<long double>(frac.get_d());
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational Rational::pow(unsigned exponent) const
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

BigInt factorial(unsigned n)
{
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace dbell
