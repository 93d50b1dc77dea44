#pragma once

#include <vector>

#include <dbell/mpoly.hpp>

namespace dbell {

/// Truncated power series sum_{n=0}^{N} c_n t^n with MPoly coefficients.
/// Coefficients are ordinary (not divided by n!); callers that want
/// exponential-normalized values multiply c_n by n! themselves.
class Series {
public:
    /// Zero series of the given order.
    explicit Series(unsigned order) : coeffs_(order + 1) {}

    static Series one(unsigned order);
    /// The series t (zero when order is 0).
    static Series t(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const MPoly& operator[](unsigned n) const { return coeffs_.at(n); }
    MPoly& operator[](unsigned n) { return coeffs_.at(n); }

    Series& operator+=(const Series& rhs);
    Series& operator*=(const MPoly& scalar);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<MPoly> coeffs_;
};

/// F(t) = (1 + lambda t)^{1/lambda} - 1, c_n = (1|lambda)_n / n!, c_0 = 0.
Series series_F(unsigned order);

/// Truncated Cauchy product. Throws std::invalid_argument on order mismatch.
Series series_mul(const Series& a, const Series& b);

/// k-fold truncated product; a^0 is the constant-1 series.
Series series_pow(const Series& a, unsigned k);

/// exp(s) for s with zero constant term, as sum_{m <= N} s^m / m!.
/// Throws std::invalid_argument when s has a nonzero constant term.
Series series_exp(const Series& s);

/// Coefficient of t^n in F(t)^k by the closed form
/// (1/n!) sum_j (-1)^{k-j} C(k, j) (j|lambda)_n. Zero when k > n.
/// Requires n >= 1 and k >= 1 (std::invalid_argument otherwise).
MPoly composita_F(unsigned n, unsigned k);

/// n! [t^n] exp(x L F(t)): the degenerate Bell polynomial straight from
/// its generating function.
MPoly oracle_degenerate_bell(unsigned n);

/// (n!/m!) [t^n] F(t)^m. Throws std::invalid_argument when m > n.
MPoly oracle_degenerate_stirling2(unsigned n, unsigned m);

} // namespace dbell
