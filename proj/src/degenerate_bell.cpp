#include <dbell/degenerate_bell.hpp>

#include <stdexcept>
#include <vector>

#include <dbell/combinatorics.hpp>
#include <dbell/series.hpp>

namespace dbell {

namespace {

MPoly lambda_pow(unsigned e)
{
    return MPoly::var(Var::lambda, e);
}

MPoly lx_pow(unsigned m)
{
    return MPoly::term(Monomial(0, m, m, 0), Rational(1));
}

} // namespace

MPoly degenerate_stirling2_closed(unsigned n, unsigned m)
{
    if (m > n) {
        throw std::invalid_argument("degenerate_stirling2_closed: require m <= n");
    }
    std::vector<MPoly::Term> raw;
    for (unsigned k = m; k <= n; ++k) {
        raw.emplace_back(Monomial::of(Var::lambda, n - k), Rational(BigInt(stirling1(n, k) * stirling2(k, m))));
    }
    return MPoly::normalize(raw);
}

MPoly bel_thm1(unsigned n)
{
    std::vector<MPoly::Term> raw;
    for (unsigned k = 0; k <= n; ++k) {
        const BigInt s1 = stirling1(n, k);
        for (unsigned m = 0; m <= k; ++m) {
            raw.emplace_back(Monomial(n - k, m, m, 0), Rational(BigInt(s1 * stirling2(k, m))));
        }
    }
    return MPoly::normalize(raw);
}

MPoly bel_thm3(unsigned n)
{
    MPoly result;
    for (unsigned m = 0; m <= n; ++m) {
        result += degenerate_stirling2_closed(n, m) * lx_pow(m);
    }
    return result;
}

MPoly bel_thm7(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("bel_thm7: defined for n >= 1");
    }
    const Bindings scaled{{Var::x, MPoly::var(Var::x) * MPoly::var(Var::L)}};
    std::vector<MPoly> classical_at_xl;
    classical_at_xl.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        classical_at_xl.push_back(substitute(bell_polynomial(j), scaled));
    }

    MPoly sum;
    for (unsigned k = 1; k <= n; ++k) {
        MPoly inner;
        for (unsigned j = 1; j <= k; ++j) {
            inner += classical_at_xl[j - 1] * Rational(binomial(k - 1, j - 1));
        }
        sum += inner * lambda_pow(n - k) * Rational(stirling1(n, k));
    }
    return lx_pow(1) * sum;
}

MPoly bel_composita(unsigned n)
{
    if (n == 0) {
        return MPoly(1);
    }
    MPoly sum;
    for (unsigned k = 1; k <= n; ++k) {
        const MPoly r_k = lx_pow(k) * Rational(BigInt(1), factorial(k));
        sum += composita_F(n, k) * r_k;
    }
    return sum * Rational(factorial(n));
}

MPoly bel_recurrence_step(const std::vector<MPoly>& lower)
{
    if (lower.empty()) {
        throw std::invalid_argument("bel_recurrence_step: need at least Bel_0");
    }
    const auto n = static_cast<unsigned>(lower.size() - 1);
    const MPoly shifted = MPoly(1) - MPoly::var(Var::lambda);
    MPoly sum;
    for (unsigned k = 0; k <= n; ++k) {
        sum += lower[k] * falling_factorial_general(shifted, n - k) * Rational(binomial(n, k));
    }
    return lx_pow(1) * sum;
}

MPoly bel_recurrence(unsigned n)
{
    std::vector<MPoly> bells{MPoly(1)};
    while (bells.size() <= n) {
        bells.push_back(bel_recurrence_step(bells));
    }
    return bells[n];
}

MPoly limit_lambda_zero(const MPoly& p)
{
    return substitute(p, {{Var::lambda, MPoly()}, {Var::L, MPoly(1)}});
}

std::optional<MPoly> divide_by_L(const MPoly& p)
{
    std::vector<MPoly::Term> raw;
    raw.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        if (m[Var::L] == 0) {
            return std::nullopt;
        }
        Monomial reduced = m;
        reduced[Var::L] -= 1;
        raw.emplace_back(reduced, c);
    }
    return MPoly::normalize(raw);
}

VerificationReport verify_range(std::string identity, unsigned lo, unsigned hi,
                                const std::function<std::pair<MPoly, MPoly>(unsigned)>& sides)
{
    VerificationReport report{std::move(identity), lo, hi, true, std::nullopt};
    for (unsigned n = lo; n <= hi; ++n) {
        auto [lhs, rhs] = sides(n);
        if (lhs != rhs) {
            report.passed = false;
            report.first_failure = VerificationFailure{n, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    return report;
}

namespace {

std::pair<MPoly, MPoly> addition_sides(unsigned n)
{
    const Bindings shift{{Var::x, MPoly::var(Var::x) + MPoly::var(Var::y)}};
    const Bindings rename{{Var::x, MPoly::var(Var::y)}};
    std::vector<MPoly> bells;
    for (unsigned m = 0; m <= n; ++m) {
        bells.push_back(bel_thm3(m));
    }
    MPoly rhs;
    for (unsigned m = 0; m <= n; ++m) {
        rhs += bells[m] * substitute(bells[n - m], rename) * Rational(binomial(n, m));
    }
    return {substitute(bells[n], shift), rhs};
}

std::pair<MPoly, MPoly> derivative_sides(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("verify_derivative: defined for n >= 1");
    }
    MPoly rhs;
    for (unsigned m = 0; m < n; ++m) {
        rhs += bel_thm3(m) * falling_factorial_general(MPoly(1), n - m) * Rational(binomial(n, m));
    }
    const MPoly dx = derivative_x(bel_thm3(n));
    auto scaled = divide_by_L(dx);
    if (!scaled) {
        // report the raw derivative so the offending L-free term is visible
        return {dx, rhs};
    }
    return {*scaled, rhs};
}

} // namespace

VerificationReport verify_addition(unsigned n)
{
    return verify_addition(n, n);
}

VerificationReport verify_addition(unsigned lo, unsigned hi)
{
    return verify_range("addition", lo, hi, addition_sides);
}

VerificationReport verify_derivative(unsigned n)
{
    return verify_derivative(n, n);
}

VerificationReport verify_derivative(unsigned lo, unsigned hi)
{
    if (lo == 0) {
        throw std::invalid_argument("verify_derivative: defined for n >= 1");
    }
    return verify_range("derivative", lo, hi, derivative_sides);
}

} // namespace dbell
