#include <dbell/mpoly.hpp>

#include <algorithm>
#include <sstream>

namespace dbell {

const char* var_name(Var v)
{
    switch (v) {
        case Var::lambda:
            return "lambda";
        case Var::L:
            return "L";
        case Var::x:
            return "x";
        case Var::y:
            return "y";
    }
    return "?";
}

Monomial Monomial::of(Var v, std::uint32_t power)
{
    Monomial m;
    m[v] = power;
    return m;
}

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (auto e : exps) {
        d += e;
    }
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        r.exps[i] = a.exps[i] + b.exps[i];
    }
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da < db;
    }
    return a.exps < b.exps;
}

MPoly::MPoly(const Rational& constant)
{
    if (!constant.is_zero()) {
        terms_.emplace(Monomial{}, constant);
    }
}

MPoly MPoly::var(Var v, std::uint32_t power)
{
    return term(Monomial::of(v, power), Rational(1));
}

MPoly MPoly::term(const Monomial& m, const Rational& coeff)
{
    MPoly p;
    p.add_term(m, coeff);
    return p;
}

MPoly MPoly::normalize(const std::vector<Term>& raw_terms)
{
    MPoly p;
    for (const auto& [m, c] : raw_terms) {
        p.add_term(m, c);
    }
    return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational MPoly::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

std::uint32_t MPoly::degree_in(Var v) const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m[v]);
    }
    return d;
}

MPoly& MPoly::operator+=(const MPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MPoly MPoly::pow(unsigned exponent) const
{
    MPoly result(1);
    MPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

namespace {

std::string monomial_text(const Monomial& m)
{
    static constexpr std::array<const char*, kNumVars> symbols{"λ", "L", "x", "y"};
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m.exps[i] == 0) {
            continue;
        }
        out += symbols[i];
        if (m.exps[i] > 1) {
            out += "^" + std::to_string(m.exps[i]);
        }
    }
    return out;
}

std::string magnitude_text(const Rational& c)
{
    const BigInt num = abs(c.numerator());
    if (c.is_integer()) {
        return num.get_str();
    }
    return num.get_str() + "/" + c.denominator().get_str();
}

} // namespace

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const std::string vars = monomial_text(m);
        const bool unit = c.is_integer() && abs(c.numerator()) == 1;
        if (vars.empty()) {
            out += magnitude_text(c);
        } else if (unit) {
            out += vars;
        } else if (c.is_integer()) {
            out += magnitude_text(c) + vars;
        } else {
            out += "(" + magnitude_text(c) + ")" + vars;
        }
    }
    return out;
}

MPoly substitute(const MPoly& p, const Bindings& bindings)
{
    if (bindings.empty()) {
        return p;
    }
    // power_cache[v][e] = bindings[v]^e, filled lazily
    std::array<std::vector<MPoly>, kNumVars> power_cache;
    const auto bound_power = [&](Var v, std::uint32_t e) -> const MPoly& {
        auto& cache = power_cache[static_cast<std::size_t>(v)];
        if (cache.empty()) {
            cache.emplace_back(1);
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * bindings.at(v));
        }
        return cache[e];
    };

    MPoly result;
    for (const auto& [m, c] : p.terms()) {
        Monomial residual;
        MPoly factor(c);
        for (Var v : kAllVars) {
            const auto e = m[v];
            if (e == 0) {
                continue;
            }
            if (bindings.contains(v)) {
                factor *= bound_power(v, e);
            } else {
                residual[v] = e;
            }
        }
        if (!factor.is_zero()) {
            result += factor * MPoly::term(residual, Rational(1));
        }
    }
    return result;
}

MPoly derivative(const MPoly& p, Var v)
{
    std::vector<MPoly::Term> raw;
    raw.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        const auto e = m[v];
        if (e == 0) {
            continue;
        }
        Monomial dm = m;
        dm[v] = e - 1;
        raw.emplace_back(dm, c * Rational(static_cast<long>(e)));
    }
    return MPoly::normalize(raw);
}

Rational evaluate(const MPoly& p, const std::array<Rational, kNumVars>& values)
{
    Rational sum;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m.exps[i] != 0) {
                t *= values[i].pow(m.exps[i]);
            }
        }
        sum += t;
    }
    return sum;
}

} // namespace dbell
