#include <dbell/series.hpp>

#include <stdexcept>

#include <dbell/combinatorics.hpp>

namespace dbell {

Series Series::one(unsigned order)
{
    Series s(order);
    s[0] = MPoly(1);
    return s;
}

Series Series::t(unsigned order)
{
    Series s(order);
    if (order >= 1) {
        s[1] = MPoly(1);
    }
    return s;
}

Series& Series::operator+=(const Series& rhs)
{
    if (rhs.order() != order()) {
        throw std::invalid_argument("Series: order mismatch");
    }
    for (unsigned n = 0; n <= order(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

Series& Series::operator*=(const MPoly& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Series series_F(unsigned order)
{
    Series s(order);
    for (unsigned n = 1; n <= order; ++n) {
        s[n] = falling_factorial_general(MPoly(1), n) * Rational(BigInt(1), factorial(n));
    }
    return s;
}

Series series_mul(const Series& a, const Series& b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("series_mul: order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
    const unsigned order = a.order();
    Series r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

Series series_pow(const Series& a, unsigned k)
{
    Series result = Series::one(a.order());
    for (unsigned i = 0; i < k; ++i) {
        result = series_mul(result, a);
    }
    return result;
}

Series series_exp(const Series& s)
{
    if (!s[0].is_zero()) {
        throw std::invalid_argument("series_exp: constant term must be zero");
    }
    const unsigned order = s.order();
    Series sum = Series::one(order);
    Series power = Series::one(order);
    // s^m vanishes below t^m, so m <= order suffices
    for (unsigned m = 1; m <= order; ++m) {
        power = series_mul(power, s);
        Series term = power;
        term *= MPoly(Rational(BigInt(1), factorial(m)));
        sum += term;
    }
    return sum;
}

MPoly composita_F(unsigned n, unsigned k)
{
    if (n == 0 || k == 0) {
        throw std::invalid_argument("composita_F: require n >= 1 and k >= 1");
    }
    if (k > n) {
        return MPoly();
    }
    MPoly sum;
    for (unsigned j = 1; j <= k; ++j) {
        const bool negative = ((k - j) % 2) == 1;
        Rational weight(binomial(k, j));
        if (negative) {
            weight = -weight;
        }
        sum += falling_factorial_general(MPoly(static_cast<long>(j)), n) * weight;
    }
    return sum * Rational(BigInt(1), factorial(n));
}

MPoly oracle_degenerate_bell(unsigned n)
{
    Series exponent = series_F(n);
    exponent *= MPoly::var(Var::x) * MPoly::var(Var::L);
    return series_exp(exponent)[n] * Rational(factorial(n));
}

MPoly oracle_degenerate_stirling2(unsigned n, unsigned m)
{
    if (m > n) {
        throw std::invalid_argument("oracle_degenerate_stirling2: require m <= n");
    }
    const Series power = series_pow(series_F(n), m);
    return power[n] * Rational(factorial(n), factorial(m));
}

} // namespace dbell
