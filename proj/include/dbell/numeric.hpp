#pragma once

#include <optional>
#include <string>
#include <vector>

#include <dbell/mpoly.hpp>

namespace dbell {

inline constexpr unsigned kDefaultTerms = 80;
inline constexpr double kDefaultTol = 1e-9;

/// Outcome of a floating-point comparison. `lambda` is empty for the
/// classical (lambda = 0) identities.
struct NumericCheck {
    std::string identity;
    unsigned n = 0;
    std::optional<double> lambda;
    double x = 0.0;
    unsigned terms = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_error = 0.0;
    double tol = 0.0;
    bool passed = false;
};

/// Throws std::domain_error unless lambda is finite, > -1 and != 0.
void validate_lambda(double lambda);

/// log(1+lambda)/lambda.
double log_factor(double lambda);

/// Evaluates a polynomial in (lambda, L, x) at the given lambda and x with
/// L = log(1+lambda)/lambda. lambda and x enter exactly (as the rationals
/// their doubles denote); only the final polynomial in L is evaluated in
/// floating point.
double eval_with_log_factor(const MPoly& p, double lambda, double x);

/// Bel_{n,lambda}(x) from the canonical closed form.
double eval_bel_numeric(unsigned n, double lambda, double x);

/// e^{-xL} sum_{l=0}^{terms} (x L)^l / l! (l|lambda)_n.
double dobinski_degenerate(unsigned n, double lambda, double x, unsigned terms);

/// e^{-x} sum_{k=0}^{terms} k^n x^k / k!.
double dobinski_classical_poly(unsigned n, double x, unsigned terms);

/// The Bell number form: x = 1.
inline double dobinski_classical(unsigned n, unsigned terms)
{
    return dobinski_classical_poly(n, 1.0, terms);
}

/// Truncated degenerate Dobinski series against the closed form.
NumericCheck thm6_numeric_check(unsigned n, double lambda, double x, unsigned terms = kDefaultTerms,
                                double tol = kDefaultTol);

/// e^{xL} times the double Stirling sum, against
/// sum_{k=0}^{terms} (x L)^k / k! sum_l k^l lambda^{n-l} S1(n, l).
NumericCheck thm2_numeric_check(unsigned n, double lambda, double x, unsigned terms = kDefaultTerms,
                                double tol = kDefaultTol);

/// Classical Dobinski series at x against Bel_n(x).
NumericCheck classical_dobinski_check(unsigned n, double x, unsigned terms = kDefaultTerms,
                                      double tol = kDefaultTol);

/// Exact first-order coefficient c1 in Bel_{n,lambda}(x) = Bel_n(x) + c1 lambda + O(lambda^2),
/// using L = 1 - lambda/2 + O(lambda^2).
double limit_slope(unsigned n, double x);

/// For each lambda, Bel_{n,lambda}(x) against Bel_n(x). A check passes when
/// the gap is within twice the first-order deviation |c1 lambda| plus
/// rounding slack.
std::vector<NumericCheck> limit_sweep(unsigned n, double x, const std::vector<double>& lambdas);

} // namespace dbell
