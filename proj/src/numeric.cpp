#include <dbell/numeric.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <dbell/combinatorics.hpp>
#include <dbell/degenerate_bell.hpp>

namespace dbell {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(long double v)
    {
        const long double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

void validate_x(double x)
{
    if (!std::isfinite(x)) {
        throw std::domain_error("x must be finite");
    }
}

void validate_terms(unsigned terms)
{
    if (terms < 1) {
        throw std::domain_error("terms must be >= 1");
    }
}

long double log_factor_ld(double lambda)
{
    return std::log1p(static_cast<long double>(lambda)) / static_cast<long double>(lambda);
}

NumericCheck make_check(std::string identity, unsigned n, std::optional<double> lambda, double x, unsigned terms,
                        long double lhs, long double rhs, double tol)
{
    NumericCheck c;
    c.identity = std::move(identity);
    c.n = n;
    c.lambda = lambda;
    c.x = x;
    c.terms = terms;
    c.lhs = static_cast<double>(lhs);
    c.rhs = static_cast<double>(rhs);
    c.abs_error = static_cast<double>(std::fabs(lhs - rhs));
    c.tol = tol;
    c.passed = c.abs_error <= tol;
    return c;
}

long double eval_with_log_factor_ld(const MPoly& p, double lambda, double x)
{
    const MPoly reduced =
        substitute(p, {{Var::lambda, MPoly(Rational::from_double(lambda))}, {Var::x, MPoly(Rational::from_double(x))}});
    std::vector<Rational> by_power(reduced.degree_in(Var::L) + 1);
    for (const auto& [m, c] : reduced.terms()) {
        if (m[Var::y] != 0) {
            throw std::invalid_argument("eval_with_log_factor: polynomial depends on y");
        }
        by_power[m[Var::L]] += c;
    }
    const long double L = log_factor_ld(lambda);
    long double acc = 0.0L;
    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        acc = acc * L + it->to_long_double();
    }
    return acc;
}

} // namespace

void validate_lambda(double lambda)
{
    if (!std::isfinite(lambda) || lambda <= -1.0 || lambda == 0.0) {
        throw std::domain_error("lambda must be finite, > -1 and nonzero (got " + std::to_string(lambda) + ")");
    }
}

double log_factor(double lambda)
{
    validate_lambda(lambda);
    return static_cast<double>(log_factor_ld(lambda));
}

double eval_with_log_factor(const MPoly& p, double lambda, double x)
{
    validate_lambda(lambda);
    validate_x(x);
    return static_cast<double>(eval_with_log_factor_ld(p, lambda, x));
}

double eval_bel_numeric(unsigned n, double lambda, double x)
{
    return eval_with_log_factor(bel_thm3(n), lambda, x);
}

namespace {

long double dobinski_degenerate_ld(unsigned n, double lambda, double x, unsigned terms)
{
    const long double xl = static_cast<long double>(x) * log_factor_ld(lambda);
    const long double lam = lambda;
    CompensatedSum sum;
    long double weight = 1.0L; // (xL)^l / l!
    for (unsigned l = 0; l <= terms; ++l) {
        if (l > 0) {
            weight *= xl / static_cast<long double>(l);
        }
        long double falling = 1.0L; // (l|lambda)_n
        for (unsigned i = 0; i < n; ++i) {
            falling *= static_cast<long double>(l) - static_cast<long double>(i) * lam;
        }
        sum.add(weight * falling);
    }
    return std::exp(-xl) * sum.value();
}

} // namespace

double dobinski_degenerate(unsigned n, double lambda, double x, unsigned terms)
{
    validate_lambda(lambda);
    validate_x(x);
    validate_terms(terms);
    return static_cast<double>(dobinski_degenerate_ld(n, lambda, x, terms));
}

double dobinski_classical_poly(unsigned n, double x, unsigned terms)
{
    validate_x(x);
    validate_terms(terms);
    CompensatedSum sum;
    long double weight = 1.0L; // x^k / k!
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) {
            weight *= static_cast<long double>(x) / static_cast<long double>(k);
        }
        // 0^0 = 1 so that n = 0 sums e^x
        sum.add(weight * std::pow(static_cast<long double>(k), static_cast<long double>(n)));
    }
    return static_cast<double>(std::exp(-static_cast<long double>(x)) * sum.value());
}

NumericCheck thm6_numeric_check(unsigned n, double lambda, double x, unsigned terms, double tol)
{
    validate_lambda(lambda);
    validate_x(x);
    validate_terms(terms);
    const long double closed = eval_with_log_factor_ld(bel_thm3(n), lambda, x);
    return make_check("thm6_degenerate_dobinski", n, lambda, x, terms, dobinski_degenerate_ld(n, lambda, x, terms),
                      closed, tol);
}

NumericCheck thm2_numeric_check(unsigned n, double lambda, double x, unsigned terms, double tol)
{
    validate_lambda(lambda);
    validate_x(x);
    validate_terms(terms);
    const long double xl = static_cast<long double>(x) * log_factor_ld(lambda);
    const long double lhs = std::exp(xl) * eval_with_log_factor_ld(bel_thm1(n), lambda, x);

    // inner sum_l k^l lambda^{n-l} S1(n, l) is a finite exact sum; only the
    // outer series is truncated and accumulated in floating point
    const Rational lam = Rational::from_double(lambda);
    std::vector<Rational> lambda_powers{Rational(1)};
    for (unsigned i = 1; i <= n; ++i) {
        lambda_powers.push_back(lambda_powers.back() * lam);
    }
    CompensatedSum rhs;
    long double weight = 1.0L;
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) {
            weight *= xl / static_cast<long double>(k);
        }
        Rational inner;
        BigInt k_pow(1);
        for (unsigned l = 0; l <= n; ++l) {
            if (l > 0) {
                k_pow *= k;
            }
            inner += Rational(BigInt(k_pow * stirling1(n, l))) * lambda_powers[n - l];
        }
        rhs.add(weight * inner.to_long_double());
    }
    return make_check("thm2_stirling_dobinski", n, lambda, x, terms, lhs, rhs.value(), tol);
}

NumericCheck classical_dobinski_check(unsigned n, double x, unsigned terms, double tol)
{
    validate_x(x);
    validate_terms(terms);
    const Rational exact = evaluate(bell_polynomial(n), {Rational(), Rational(), Rational::from_double(x), Rational()});
    return make_check("classical_dobinski", n, std::nullopt, x, terms, dobinski_classical_poly(n, x, terms),
                      exact.to_long_double(), tol);
}

double limit_slope(unsigned n, double x)
{
    validate_x(x);
    // d/dlambda P(lambda, L(lambda), x) at 0 with L'(0) = -1/2
    const MPoly p = bel_thm3(n);
    const MPoly slope = derivative(p, Var::lambda) - derivative(p, Var::L) * Rational(BigInt(1), BigInt(2));
    return evaluate(slope, {Rational(), Rational(1), Rational::from_double(x), Rational()}).to_double();
}

std::vector<NumericCheck> limit_sweep(unsigned n, double x, const std::vector<double>& lambdas)
{
    validate_x(x);
    const Rational classical =
        evaluate(bell_polynomial(n), {Rational(), Rational(), Rational::from_double(x), Rational()});
    const long double target = classical.to_long_double();
    const double slope = limit_slope(n, x);
    std::vector<NumericCheck> checks;
    checks.reserve(lambdas.size());
    for (double lambda : lambdas) {
        validate_lambda(lambda);
        const long double value = eval_with_log_factor_ld(bel_thm3(n), lambda, x);
        const double rounding = 1e-12 * std::max(1.0L, std::fabs(target));
        const double tol = 2.0 * std::fabs(slope * lambda) + rounding;
        checks.push_back(make_check("limit_lambda_to_zero", n, lambda, x, 0, value, target, tol));
    }
    return checks;
}

} // namespace dbell
