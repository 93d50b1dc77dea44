#pragma once

#include <vector>

#include <dbell/mpoly.hpp>
#include <dbell/rational.hpp>

namespace dbell {

enum class StirlingKind { first, second };

/// Triangular table of Stirling numbers, entry (n, k) for 0 <= k <= n <= n_max.
/// First-kind entries are signed: S1(n, k) is the coefficient of x^k in
/// x(x-1)...(x-n+1).
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, unsigned n_max);

    StirlingKind kind() const { return kind_; }
    unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

    /// Throws std::out_of_range unless k <= n <= n_max.
    const BigInt& at(unsigned n, unsigned k) const;
    const std::vector<BigInt>& row(unsigned n) const;

private:
    StirlingKind kind_;
    std::vector<std::vector<BigInt>> rows_;
};

/// n choose k; zero when k < 0 or k > n.
BigInt binomial(unsigned n, long k);

/// Signed Stirling number of the first kind. Throws std::invalid_argument
/// for negative arguments or k > n.
BigInt stirling1(long n, long k);

/// Stirling number of the second kind. Same argument contract as stirling1.
BigInt stirling2(long n, long k);

/// Bel_n(x) = sum_k S2(n, k) x^k.
MPoly bell_polynomial(unsigned n);

/// (z|lambda)_n = z (z - lambda) ... (z - (n-1) lambda); 1 when n = 0.
MPoly falling_factorial_general(const MPoly& z, unsigned n);

} // namespace dbell
