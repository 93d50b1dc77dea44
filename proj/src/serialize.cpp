#include <dbell/serialize.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dbell {

Json to_json(const MPoly& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json pow = Json::object();
        for (Var v : kAllVars) {
            pow[var_name(v)] = m[v];
        }
        terms.push_back(Json{{"coeff", c.to_string()}, {"pow", std::move(pow)}});
    }
    return terms;
}

MPoly mpoly_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("MPoly JSON: expected an array of terms");
    }
    std::vector<MPoly::Term> raw;
    MPoly::TermMap seen;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("pow") || !term["coeff"].is_string() ||
            !term["pow"].is_object()) {
            throw std::invalid_argument("MPoly JSON: term needs string 'coeff' and object 'pow'");
        }
        const Rational coeff = Rational::parse(term["coeff"].get<std::string>());
        if (coeff.is_zero()) {
            throw std::invalid_argument("MPoly JSON: zero coefficient");
        }
        Monomial m;
        for (const auto& [key, value] : term["pow"].items()) {
            bool known = false;
            for (Var v : kAllVars) {
                if (key == var_name(v)) {
                    if (!value.is_number_unsigned()) {
                        throw std::invalid_argument("MPoly JSON: exponent of '" + key + "' must be a non-negative integer");
                    }
                    m[v] = value.get<std::uint32_t>();
                    known = true;
                }
            }
            if (!known) {
                throw std::invalid_argument("MPoly JSON: unknown variable '" + key + "'");
            }
        }
        if (!seen.emplace(m, coeff).second) {
            throw std::invalid_argument("MPoly JSON: repeated monomial");
        }
        raw.emplace_back(m, coeff);
    }
    return MPoly::normalize(raw);
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["identity"] = r.identity;
    j["range"] = Json::array({r.lo, r.hi});
    j["passed"] = r.passed;
    if (r.first_failure) {
        j["first_failure"] = Json{{"n", r.first_failure->n},
                                  {"lhs", to_json(r.first_failure->lhs)},
                                  {"rhs", to_json(r.first_failure->rhs)}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json to_json(const NumericCheck& c)
{
    Json params;
    params["n"] = c.n;
    if (c.lambda) {
        params["lambda"] = *c.lambda;
    } else {
        params["lambda"] = nullptr;
    }
    params["x"] = c.x;
    params["terms"] = c.terms;

    Json j;
    j["identity"] = c.identity;
    j["params"] = std::move(params);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["abs_error"] = c.abs_error;
    j["tol"] = c.tol;
    j["passed"] = c.passed;
    return j;
}

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf.data(), end);
}

std::string numeric_csv_header()
{
    return "identity,n,lambda,x,terms,lhs,rhs,abs_error,passed";
}

std::string to_csv_row(const NumericCheck& c)
{
    std::string row = c.identity;
    row += "," + std::to_string(c.n);
    row += "," + (c.lambda ? format_double(*c.lambda) : std::string());
    row += "," + format_double(c.x);
    row += "," + std::to_string(c.terms);
    row += "," + format_double(c.lhs);
    row += "," + format_double(c.rhs);
    row += "," + format_double(c.abs_error);
    row += c.passed ? ",true" : ",false";
    return row;
}

} // namespace dbell
