#include <dbell/combinatorics.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

namespace dbell {

StirlingTable::StirlingTable(StirlingKind kind, unsigned n_max) : kind_(kind)
{
    rows_.reserve(n_max + 1);
    rows_.push_back({BigInt(1)});
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<BigInt> row(n + 1, BigInt(0));
        for (unsigned k = 1; k <= n; ++k) {
            const BigInt& diag = prev[k - 1];
            const BigInt same = k < n ? prev[k] : BigInt(0);
            if (kind == StirlingKind::first) {
                // (x)_n = (x)_{n-1} (x - (n-1))
                row[k] = diag - (n - 1) * same;
            } else {
                row[k] = diag + k * same;
            }
        }
        rows_.push_back(std::move(row));
    }
}

const std::vector<BigInt>& StirlingTable::row(unsigned n) const
{
    if (n >= rows_.size()) {
        throw std::out_of_range("StirlingTable: row " + std::to_string(n) + " beyond n_max");
    }
    return rows_[n];
}

const BigInt& StirlingTable::at(unsigned n, unsigned k) const
{
    const auto& r = row(n);
    if (k > n) {
        throw std::out_of_range("StirlingTable: k > n");
    }
    return r[k];
}

BigInt binomial(unsigned n, long k)
{
    if (k < 0 || k > static_cast<long>(n)) {
        return BigInt(0);
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

namespace {

// Shared memoized tables, grown on demand. Readers copy the entry out
// under the lock, so a later regrowth never invalidates a caller's value.
class SharedStirling {
public:
    explicit SharedStirling(StirlingKind kind) : kind_(kind), table_(kind, 16) {}

    BigInt get(long n, long k)
    {
        if (n < 0 || k < 0 || k > n) {
            throw std::invalid_argument("stirling: require 0 <= k <= n, got (" + std::to_string(n) + ", " +
                                        std::to_string(k) + ")");
        }
        std::lock_guard lock(mutex_);
        const auto un = static_cast<unsigned>(n);
        if (un > table_.n_max()) {
            table_ = StirlingTable(kind_, std::max(un, 2 * table_.n_max()));
        }
        return table_.at(un, static_cast<unsigned>(k));
    }

private:
    StirlingKind kind_;
    StirlingTable table_;
    std::mutex mutex_;
};

} // namespace

BigInt stirling1(long n, long k)
{
    static SharedStirling table(StirlingKind::first);
    return table.get(n, k);
}

BigInt stirling2(long n, long k)
{
    static SharedStirling table(StirlingKind::second);
    return table.get(n, k);
}

MPoly bell_polynomial(unsigned n)
{
    std::vector<MPoly::Term> raw;
    for (unsigned k = 0; k <= n; ++k) {
        raw.emplace_back(Monomial::of(Var::x, k), Rational(stirling2(n, k)));
    }
    return MPoly::normalize(raw);
}

MPoly falling_factorial_general(const MPoly& z, unsigned n)
{
    MPoly result(1);
    const MPoly lambda = MPoly::var(Var::lambda);
    for (unsigned i = 0; i < n; ++i) {
        result *= z - Rational(static_cast<long>(i)) * lambda;
    }
    return result;
}

} // namespace dbell
