#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <dbell/rational.hpp>

namespace dbell {

/// The four formal variables. `L` stands for log(1+lambda)/lambda and is
/// treated as algebraically independent of lambda.
enum class Var : std::uint8_t { lambda = 0, L = 1, x = 2, y = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::lambda, Var::L, Var::x, Var::y};

/// JSON key of a variable: "lambda", "L", "x", "y".
const char* var_name(Var v);

struct Monomial {
    std::array<std::uint32_t, kNumVars> exps{};

    Monomial() = default;
    Monomial(std::uint32_t e_lambda, std::uint32_t e_L, std::uint32_t e_x, std::uint32_t e_y)
        : exps{e_lambda, e_L, e_x, e_y}
    {
    }

    static Monomial of(Var v, std::uint32_t power = 1);

    std::uint32_t operator[](Var v) const { return exps[static_cast<std::size_t>(v)]; }
    std::uint32_t& operator[](Var v) { return exps[static_cast<std::size_t>(v)]; }
    std::uint64_t degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically in (lambda, L, x, y).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in Q[lambda, L, x, y]. No stored coefficient is zero,
/// so structural equality of the term maps is polynomial equality.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;
    using Term = std::pair<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& constant);
    MPoly(long constant) : MPoly(Rational(constant)) {}
    MPoly(int constant) : MPoly(Rational(constant)) {}

    static MPoly var(Var v, std::uint32_t power = 1);
    static MPoly term(const Monomial& m, const Rational& coeff);

    /// Sums duplicate monomials and drops zero coefficients.
    static MPoly normalize(const std::vector<Term>& raw_terms);
    static MPoly normalize(std::initializer_list<Term> raw_terms)
    {
        return normalize(std::vector<Term>(raw_terms));
    }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of `m`, zero when absent.
    Rational coefficient(const Monomial& m) const;

    /// Largest exponent of `v` over all terms; 0 for the zero polynomial.
    std::uint32_t degree_in(Var v) const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly& operator*=(const Rational& scalar);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned exponent) const;

    /// Human-readable form, terms in descending canonical order, e.g.
    /// "L^2x^2 - λLx + Lx". Zero prints as "0".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

using Bindings = std::map<Var, MPoly>;

/// Simultaneous substitution; unbound variables stay formal.
MPoly substitute(const MPoly& p, const Bindings& bindings);

/// Formal partial derivative.
MPoly derivative(const MPoly& p, Var v);
inline MPoly derivative_x(const MPoly& p) { return derivative(p, Var::x); }

/// Exact evaluation with every variable bound.
Rational evaluate(const MPoly& p, const std::array<Rational, kNumVars>& values);

} // namespace dbell
