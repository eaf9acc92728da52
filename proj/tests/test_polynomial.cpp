#include <doctest.h>

#include "sphmap/parser.hpp"
#include "sphmap/polynomial.hpp"

using namespace sphmap;

namespace {
Polynomial pp(const std::string& text, int nvars) { return parse_polynomial(text, nvars); }
}  // namespace

TEST_CASE("arithmetic basics") {
    Polynomial xy = pp("x + y", 2);
    CHECK(xy * xy == pp("x^2 + 2*x*y + y^2", 2));
    CHECK(pp("x^2 - y^2", 2) * pp("x", 2) == pp("x^3 - x*y^2", 2));
    Polynomial p = pp("3*x^2*y - 1/2*y^3 + sqrt(2)*x", 2);
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == Polynomial(2));
    CHECK_THROWS_AS(pp("x", 2) + pp("x", 3), DimensionMismatch);
}

TEST_CASE("degree bookkeeping") {
    CHECK(pp("x^2 - y^2", 2).homogeneous_degree() == 2);
    CHECK(!pp("x^2 + y", 2).homogeneous_degree());
    CHECK(!Polynomial(2).homogeneous_degree());
    CHECK(pp("1/2*(x^2+y^2+z^2+w^2)^2", 4).homogeneous_degree() == 4);
    CHECK(pp("x*y*z", 3).degree() == 3);
    CHECK(Polynomial(3).degree() == -1);
    // degree is additive for products of nonzero polynomials
    Polynomial a = pp("x^2 + x*y", 2), b = pp("y^3 - x*y^2", 2);
    CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("partial derivatives") {
    Polynomial p = pp("x^3 - 3*x*y^2", 2);
    CHECK(p.partial_derivative(0) == pp("3*x^2 - 3*y^2", 2));
    CHECK(p.partial_derivative(1) == pp("-6*x*y", 2));
    CHECK(pp("x^2 + y^2 - 2*z^2", 3).partial_derivative(2) == pp("-4*z", 3));
    // mixed partials commute
    Polynomial q = pp("x^2*y^3 - sqrt(3)*x*y + y^4", 2);
    CHECK(q.partial_derivative(0).partial_derivative(1) ==
          q.partial_derivative(1).partial_derivative(0));
    CHECK_THROWS_AS(p.partial_derivative(2), DimensionMismatch);
}

TEST_CASE("evaluation") {
    Polynomial p = pp("x^3 - 3*x*y^2", 2);
    CHECK(p.evaluate(std::vector<Rational>{1, 0}) == RadicalScalar(1));
    CHECK(pp("x^2 + y^2", 2).evaluate(std::vector<Rational>{Rational(3, 5), Rational(4, 5)}) ==
          RadicalScalar(1));
    CHECK(pp("x^2 - y^2", 2).evaluate(std::vector<Rational>{1, 1}).is_zero());
    CHECK(pp("sqrt(2)*x", 1).evaluate(std::vector<Rational>{Rational(1, 2)}) ==
          RadicalScalar::term(Rational(1, 2), 2));
    CHECK(p.evaluate(std::vector<double>{2.0, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("normal form modulo the sphere") {
    CHECK(pp("x^2 + y^2", 2).normal_form() == pp("1", 2));
    CHECK(pp("x^2 - 1", 2).normal_form() == pp("-1*y^2", 2));
    // ideal membership: (|x|^2)^2 p - p reduces to zero
    Polynomial p = pp("x*y - sqrt(5)*z^3", 3);
    Polynomial r2 = Polynomial::radius_sq(3);
    CHECK((r2 * r2 * p - p).normal_form().is_zero());
    // remainder never carries x1-degree above one
    Polynomial nf = pp("x^6*y + x^3*z^2 - x^2", 3).normal_form();
    for (const auto& [m, c] : nf.terms()) CHECK(m[0] <= 1);
    // product-sphere reduction, one generator per block
    Polynomial q = pp("x1^2 + x2^2 + x3^2 + x4^2", 4);
    CHECK(q.normal_form({{0, 2}, {2, 4}}) == pp("2", 4));
}

TEST_CASE("exact division by the radius") {
    CHECK(*pp("(x^2+y^2)*x", 2).divide_by_radius_sq() == pp("x", 2));
    CHECK(!pp("x^2*y", 2).divide_by_radius_sq());
    Polynomial p = pp("(x^2+y^2+z^2)^2*x", 3);
    auto q = p.divide_by_radius_sq();
    REQUIRE(q);
    CHECK(*q == pp("(x^2+y^2+z^2)*x", 3));
    CHECK(*q * Polynomial::radius_sq(3) == p);
}

TEST_CASE("canonical text round-trips") {
    std::vector<std::string> samples = {
        "x1^2 - 2*x1*x2 + x2^2",
        "1/2*sqrt(2)*x1*x3 - 7/3*x2 + 4",
        "0",
        "sqrt(6)*x1^3 + sqrt(2)*x1^3 - 1/4",
    };
    for (const auto& s : samples) {
        Polynomial p = parse_polynomial(s, 3);
        CHECK(parse_polynomial(p.str(), 3) == p);
    }
}
