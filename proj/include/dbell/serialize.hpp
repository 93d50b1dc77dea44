#pragma once

#include <string>

#include <json.hpp>

#include <dbell/degenerate_bell.hpp>
#include <dbell/mpoly.hpp>
#include <dbell/numeric.hpp>

namespace dbell {

// ordered_json keeps keys in insertion order, so the emitted text follows
// the documented field order byte for byte.
using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "pow": {"lambda": a, "L": b, "x": c, "y": d}}, ...]
/// in ascending canonical (graded lexicographic) order.
Json to_json(const MPoly& p);

/// Inverse of to_json. Throws std::invalid_argument on malformed input,
/// including zero coefficients and repeated monomials.
MPoly mpoly_from_json(const Json& j);

/// {"identity", "range": [lo, hi], "passed", "first_failure": null | {"n", "lhs", "rhs"}}
Json to_json(const VerificationReport& r);

/// {"identity", "params": {"n", "lambda", "x", "terms"}, "lhs", "rhs", "abs_error", "tol", "passed"}
Json to_json(const NumericCheck& c);

/// identity,n,lambda,x,terms,lhs,rhs,abs_error,passed
std::string numeric_csv_header();
std::string to_csv_row(const NumericCheck& c);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

} // namespace dbell
