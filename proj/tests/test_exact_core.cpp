#include <doctest.h>

#include <random>

#include <dbell/mpoly.hpp>
#include <dbell/serialize.hpp>

#include "support/oracles.hpp"

using namespace dbell;

namespace {

const MPoly lam = MPoly::var(Var::lambda);
const MPoly ell = MPoly::var(Var::L);
const MPoly x = MPoly::var(Var::x);
const MPoly y = MPoly::var(Var::y);

Rational q(long p, long r)
{
    return Rational(BigInt(p), BigInt(r));
}

} // namespace

TEST_CASE("rational canonical form")
{
    CHECK(q(2, 4).numerator() == 1);
    CHECK(q(2, 4).denominator() == 2);
    CHECK(q(3, -6).numerator() == -1);
    CHECK(q(3, -6).denominator() == 2);
    CHECK(q(0, -7).to_string() == "0/1");
    CHECK(Rational().to_string() == "0/1");
    CHECK(q(-5, 1).to_string() == "-5/1");
    CHECK_THROWS_AS(q(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(), std::domain_error);
}

TEST_CASE("rational parse")
{
    CHECK(Rational::parse("6/4") == q(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0/9").to_string() == "0/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational from_double is exact")
{
    CHECK(Rational::from_double(0.5) == q(1, 2));
    CHECK(Rational::from_double(-3.0) == Rational(-3));
    // 0.1 is not 1/10 in binary
    CHECK(Rational::from_double(0.1) != q(1, 10));
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("poly_normalize examples")
{
    CHECK(MPoly::normalize({{Monomial::of(Var::x), Rational(1)}, {Monomial::of(Var::x), Rational(-1)}}).is_zero());
    CHECK(MPoly::normalize({{Monomial::of(Var::x), q(1, 2)}, {Monomial::of(Var::x), q(1, 2)}}) == x);
    const MPoly half = MPoly::normalize({{Monomial(1, 1, 0, 0), q(2, 4)}});
    CHECK(half.size() == 1);
    CHECK(half.coefficient(Monomial(1, 1, 0, 0)) == q(1, 2));
}

TEST_CASE("poly_mul examples")
{
    CHECK((x + 1) * (x - 1) == x * x - 1);
    CHECK(((x + 1) * MPoly()).is_zero());
    CHECK((1 - lam) * (1 - 2 * lam) == 1 - 3 * lam + 2 * lam * lam);
}

TEST_CASE("poly_substitute examples")
{
    const MPoly bel2 = ell * ell * x * x + (1 - lam) * ell * x;
    CHECK(substitute(bel2, {{Var::lambda, MPoly()}, {Var::L, MPoly(1)}}) == x * x + x);
    CHECK(substitute(x, {{Var::x, x + y}}) == x + y);
    CHECK(substitute(lam * ell, {}) == lam * ell);
}

TEST_CASE("substitution is simultaneous")
{
    // x -> y, y -> x swaps rather than collapsing
    CHECK(substitute(x * y * y, {{Var::x, y}, {Var::y, x}}) == y * x * x);
}

TEST_CASE("poly_derivative_x examples")
{
    CHECK(derivative_x(x.pow(3)) == 3 * x * x);
    const MPoly bel2 = ell * ell * x * x + (1 - lam) * ell * x;
    CHECK(derivative_x(bel2) == 2 * ell * ell * x + (1 - lam) * ell);
    CHECK(derivative_x(lam.pow(5)).is_zero());
}

TEST_CASE("poly_eval_exact examples")
{
    const std::array<Rational, kNumVars> at_x1{Rational(), Rational(), Rational(1), Rational()};
    CHECK(evaluate(x * x + x, at_x1) == Rational(2));
    CHECK(evaluate(MPoly(), at_x1) == Rational());
    const std::array<Rational, kNumVars> at_half{q(1, 2), Rational(), Rational(), Rational()};
    CHECK(evaluate(1 - 3 * lam + 2 * lam * lam, at_half) == Rational());
}

TEST_CASE("pretty printing")
{
    CHECK(MPoly().to_string() == "0");
    CHECK((x.pow(3) + 3 * x * x + x).to_string() == "x^3 + 3x^2 + x");
    CHECK((1 - lam).to_string() == "-λ + 1");
    CHECK((q(1, 2) * ell * x - 1).to_string() == "(1/2)Lx - 1");
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
        const MPoly a = testing::random_mpoly(rng);
        const MPoly b = testing::random_mpoly(rng);
        const MPoly c = testing::random_mpoly(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * MPoly(1) == a);
    }
}

TEST_CASE("stored coefficients are never zero")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly p = testing::random_mpoly(rng) * testing::random_mpoly(rng) - testing::random_mpoly(rng);
        for (const auto& [m, c] : p.terms()) {
            REQUIRE(!c.is_zero());
            REQUIRE(c.denominator() > 0);
        }
    }
}

TEST_CASE("shift by y then y -> 0 is the identity on y-free polynomials")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly p = testing::random_mpoly(rng, 5, 3, false);
        const MPoly shifted = substitute(p, {{Var::x, x + y}});
        REQUIRE(substitute(shifted, {{Var::y, MPoly()}}) == p);
    }
}

TEST_CASE("derivative is linear and obeys the product rule")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly a = testing::random_mpoly(rng);
        const MPoly b = testing::random_mpoly(rng);
        const Rational s = testing::random_rational(rng);
        REQUIRE(derivative_x(a + s * b) == derivative_x(a) + s * derivative_x(b));
        REQUIRE(derivative_x(a * b) == derivative_x(a) * b + a * derivative_x(b));
    }
}

TEST_CASE("evaluation commutes with multiplication and substitution")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly a = testing::random_mpoly(rng);
        const MPoly b = testing::random_mpoly(rng);
        const MPoly sub = testing::random_mpoly(rng, 3, 2);
        std::array<Rational, kNumVars> point;
        for (auto& v : point) {
            v = testing::random_rational(rng);
        }
        REQUIRE(evaluate(a * b, point) == evaluate(a, point) * evaluate(b, point));

        auto shifted_point = point;
        shifted_point[static_cast<std::size_t>(Var::x)] = evaluate(sub, point);
        REQUIRE(evaluate(substitute(a, {{Var::x, sub}}), point) == evaluate(a, shifted_point));
    }
}

TEST_CASE("MPoly JSON format")
{
    const MPoly p = MPoly::normalize({{Monomial(1, 1, 0, 0), q(-1, 2)}, {Monomial(), Rational(3)}});
    CHECK(to_json(p).dump() ==
          R"([{"coeff":"3/1","pow":{"lambda":0,"L":0,"x":0,"y":0}},)"
          R"({"coeff":"-1/2","pow":{"lambda":1,"L":1,"x":0,"y":0}}])");
    CHECK(to_json(MPoly()).dump() == "[]");
}

TEST_CASE("MPoly JSON round-trips byte for byte")
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly p = testing::random_mpoly(rng, 8);
        const std::string text = to_json(p).dump();
        const MPoly back = mpoly_from_json(Json::parse(text));
        REQUIRE(back == p);
        REQUIRE(to_json(back).dump() == text);
    }
}

TEST_CASE("MPoly JSON rejects malformed input")
{
    CHECK_THROWS_AS(mpoly_from_json(Json::parse(R"({"coeff":"1"})")), std::invalid_argument);
    CHECK_THROWS_AS(mpoly_from_json(Json::parse(R"([{"coeff":"0/1","pow":{"x":1}}])")), std::invalid_argument);
    CHECK_THROWS_AS(mpoly_from_json(Json::parse(R"([{"coeff":"1/1","pow":{"z":1}}])")), std::invalid_argument);
    CHECK_THROWS_AS(mpoly_from_json(Json::parse(R"([{"coeff":"1/1","pow":{"x":-1}}])")), std::invalid_argument);
    CHECK_THROWS_AS(mpoly_from_json(Json::parse(R"([{"coeff":"1/1","pow":{"x":1}},{"coeff":"2/1","pow":{"x":1}}])")),
                    std::invalid_argument);
    // missing variables default to exponent 0
    CHECK(mpoly_from_json(Json::parse(R"([{"coeff":"2","pow":{"x":1}}])")) == 2 * x);
}
