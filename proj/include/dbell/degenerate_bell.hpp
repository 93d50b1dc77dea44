#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <dbell/mpoly.hpp>

namespace dbell {

// Closed forms for the degenerate Stirling numbers S2(n, m | lambda) and the
// degenerate Bell polynomials Bel_{n,lambda}(x). Every constructor returns a
// canonical MPoly in (lambda, L, x), where L stands for log(1+lambda)/lambda,
// so two constructions agree exactly iff their MPoly values compare equal.

/// sum_{k=m}^{n} S1(n, k) S2(k, m) lambda^{n-k}. Throws when m > n.
MPoly degenerate_stirling2_closed(unsigned n, unsigned m);

/// Double Stirling sum: sum_{k, m} L^m S1(n, k) S2(k, m) lambda^{n-k} x^m.
MPoly bel_thm1(unsigned n);

/// sum_m S2(n, m | lambda) L^m x^m. The canonical constructor.
MPoly bel_thm3(unsigned n);

/// L x sum_{k=1}^{n} sum_{j=1}^{k} S1(n, k) lambda^{n-k} C(k-1, j-1) Bel_{j-1}(x L).
/// Stated for n >= 1; throws std::invalid_argument for n = 0.
MPoly bel_thm7(unsigned n);

/// Composita route: n! sum_{k=1}^{n} F^Delta(n, k) r(k), r(k) = L^k x^k / k!.
///
/// The composition theorem yields the ordinary coefficient a(n) of
/// R(F(t)), while Bel_{n,lambda} is an exponential coefficient, hence the
/// factor n!. Dropping it gives Bel_{n,lambda}(x) / n!.
MPoly bel_composita(unsigned n);

/// Builds Bel_0..Bel_n from Bel_0 = 1 by
/// Bel_{k+1} = x L sum_j C(k, j) Bel_j (1 - lambda | lambda)_{k-j}.
MPoly bel_recurrence(unsigned n);

/// Right-hand side of the recurrence for Bel_{n+1}, given Bel_0..Bel_n.
MPoly bel_recurrence_step(const std::vector<MPoly>& lower);

/// lambda -> 0, L -> 1.
MPoly limit_lambda_zero(const MPoly& p);

/// Exact division by L, or nullopt when some term has no factor of L.
std::optional<MPoly> divide_by_L(const MPoly& p);

struct VerificationFailure {
    unsigned n;
    MPoly lhs;
    MPoly rhs;
};

struct VerificationReport {
    std::string identity;
    unsigned lo = 0;
    unsigned hi = 0;
    bool passed = true;
    std::optional<VerificationFailure> first_failure;
};

/// Evaluates `sides(n)` for n = lo..hi and records the first mismatch.
VerificationReport verify_range(std::string identity, unsigned lo, unsigned hi,
                                const std::function<std::pair<MPoly, MPoly>(unsigned)>& sides);

/// Bel(x + y) against the binomial convolution of Bel(x) and Bel(y).
VerificationReport verify_addition(unsigned n);
VerificationReport verify_addition(unsigned lo, unsigned hi);

/// (1/L) d/dx Bel_n against sum_{m<n} C(n, m) Bel_m (1|lambda)_{n-m}.
/// A derivative with a term free of L fails the report. Requires n >= 1.
VerificationReport verify_derivative(unsigned n);
VerificationReport verify_derivative(unsigned lo, unsigned hi);

} // namespace dbell
