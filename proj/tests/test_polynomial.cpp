#include <doctest.h>

#include "kouch/error.hpp"
#include "kouch/parser.hpp"
#include "kouch/polynomial.hpp"
#include "kouch/univariate.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kouch;
using namespace kouch::testing;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

UPoly up(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto k : c) v.push_back(Rational(static_cast<long>(k)));
  return UPoly(v);
}

// Small random polynomial with integer coefficients, constant term allowed.
Polynomial small_poly(Rng& rng, int max_degree, int terms) {
  Polynomial f;
  for (int k = 0; k < terms; ++k) {
    int d = uniform(rng, 0, max_degree);
    int a = uniform(rng, 0, d);
    f += Polynomial::term(Rational(uniform(rng, -5, 5)), a, d - a);
  }
  return f;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("univariate arithmetic") {
  UPoly p = up({-1, 0, 1});  // t^2 - 1
  UPoly r = up({1, 1});
  CHECK(p.degree() == 2);
  CHECK(p.leading() == 1);
  CHECK(p.evaluate(q(3)) == 8);
  CHECK(p.derivative() == up({0, 2}));
  CHECK(exact_divide(p, r) == up({-1, 1}));
  CHECK_THROWS_AS(exact_divide(p, up({2, 1})), InvariantViolation);
  CHECK_THROWS_AS(divide(p, UPoly()), std::domain_error);
  auto d = divide(up({1, 0, 0, 1}), up({0, 1}));
  CHECK(d.quotient == up({0, 0, 1}));
  CHECK(d.remainder == up({1}));
  CHECK(gcd(p, up({1, 2, 1})) == up({1, 1}));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  CHECK(pow(r, 3) == up({1, 3, 3, 1}));
  CHECK(up({0, 0, 5}).order() == 2);
  CHECK(UPoly().order() == -1);
  CHECK(up({2, 4}).monic() == UPoly(std::vector<Rational>{q(1, 2), q(1)}));
}

TEST_CASE("parser examples") {
  Polynomial cusp = parse("y^2 - x^3");
  CHECK(cusp.terms().size() == 2);
  CHECK(cusp.coefficient(0, 2) == 1);
  CHECK(cusp.coefficient(3, 0) == -1);

  Polynomial sq = parse("(x+y)^2 + x^3");
  CHECK(sq.coefficient(2, 0) == 1);
  CHECK(sq.coefficient(1, 1) == 2);
  CHECK(sq.coefficient(0, 2) == 1);
  CHECK(sq.coefficient(3, 0) == 1);
  CHECK(sq.terms().size() == 4);

  CHECK_THROWS_AS(parse("y^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse("y^(-1)"), ParseError);
  CHECK_THROWS_AS(parse("x + z"), ParseError);
  CHECK_THROWS_AS(parse("x +"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);

  CHECK(parse("2xy") == parse("2*x*y"));
  CHECK(parse(" 3 / 2 * x ") == Polynomial::term(q(3, 2), 1, 0));
  CHECK(parse("-x^2") == Polynomial::term(q(-1), 2, 0));
  CHECK(parse("x^2^0") == parse("x"));
  CHECK(parse("(x-x)").is_zero());
}

TEST_CASE("parser error positions") {
  try {
    parse("x + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("to_string round trips through the parser") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = small_poly(rng, 6, 5) * Polynomial(q(uniform(rng, 1, 4), uniform(rng, 1, 3)));
    CHECK(parse(f.to_string()) == f);
  }
  CHECK(parse("y^2-x^3").to_string() == "-x^3 + y^2");
}

TEST_CASE("derivatives, truncation, restrictions") {
  Polynomial f = parse("x^3*y^2 + 2x*y - 7");
  CHECK(f.derivative_x() == parse("3x^2*y^2 + 2y"));
  CHECK(f.derivative_y() == parse("2x^3*y + 2x"));
  CHECK(f.truncated(3) == parse("2x*y - 7"));
  CHECK(f.order() == 0);
  CHECK(f.total_degree() == 5);
  CHECK(parse("y^3 + x*y - x^4").restrict_x_zero() == up({0, 0, 0, 1}));
  CHECK(parse("y^3 + x*y - x^4").restrict_y_zero() == up({0, 0, 0, 0, -1}));
  CHECK(Polynomial().order() == -1);
}

TEST_CASE("linear substitution") {
  Polynomial f = parse("y^2 - x^3");
  CHECK(f.linear_substitution(q(1), q(0), q(0), q(1)) == f);
  // x -> y, y -> x swaps the variables.
  CHECK(f.linear_substitution(q(0), q(1), q(1), q(0)) == parse("x^2 - y^3"));
  CHECK(parse("x*y").linear_substitution(q(1), q(1), q(1), q(-1)) == parse("x^2 - y^2"));
}

TEST_CASE("resultant agrees with Sylvester determinants at sample points") {
  Rng rng(43);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Polynomial p = small_poly(rng, 4, 5);
    Polynomial r = small_poly(rng, 4, 5);
    PolyY a(p), b(r);
    if (a.degree() < 1 || b.degree() < 1) continue;
    UPoly res = resultant_y(a, b);
    for (int x0 = -2; x0 <= 3; ++x0) {
      // Specialization commutes with the resultant when the leading
      // coefficients survive.
      if (a.leading().evaluate(q(x0)) == 0 || b.leading().evaluate(q(x0)) == 0) continue;
      auto pa = specialize_x(p, q(x0));
      auto pb = specialize_x(r, q(x0));
      CHECK(res.evaluate(q(x0)) == sylvester_resultant(pa, pb));
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("resultant examples") {
  Polynomial f = parse("y^2 - x^3");
  UPoly r = resultant_y(PolyY(f.derivative_x()), PolyY(f.derivative_y()));
  CHECK(r.order() == 2);
  CHECK(resultant_y(PolyY(parse("y - x")), PolyY(parse("y + x"))) == up({0, 2}));
  CHECK(resultant_y(PolyY(parse("(y-x)*(y+1)")), PolyY(parse("(y-x)*x"))).is_zero());
}

TEST_CASE("pseudo remainder and content") {
  PolyY a(parse("x*y^2 + y + 1"));
  PolyY b(parse("x*y - 1"));
  PolyY r = pseudo_remainder(a, b);
  // x^2 a = (x^2 y + 2x) b + x^2 + 2x
  CHECK(r.to_polynomial() == parse("x^2 + 2x"));
  CHECK(content(PolyY(parse("x^2*y + x^3"))) == up({0, 0, 1}));
  CHECK(primitive_part(PolyY(parse("x^2*y + x^3"))) == PolyY(parse("y + x")));
}

TEST_CASE("exact quotient") {
  Polynomial a = parse("y^2 - x^3");
  Polynomial b = parse("y - x + 2");
  CHECK(exact_quotient(a * b, b) == a);
  CHECK(exact_quotient(a * b, a) == b);
  CHECK_THROWS_AS(exact_quotient(a * b + parse("x"), a), InvariantViolation);
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial u = small_poly(rng, 4, 4);
    Polynomial v = small_poly(rng, 4, 4);
    if (v.is_zero()) continue;
    CHECK(exact_quotient(u * v, v) == u);
  }
}

TEST_CASE("bivariate gcd") {
  Polynomial a = parse("y^2 - x^3");
  Polynomial b = parse("y - x");
  Polynomial c = parse("x + 1");
  auto same_up_to_scalar = [](const Polynomial& g, const Polynomial& h) {
    if (g.is_zero() || h.is_zero()) return g.is_zero() && h.is_zero();
    Rational s = h.terms().rbegin()->second / g.terms().rbegin()->second;
    Polynomial scaled = g;
    scaled *= s;
    return scaled == h;
  };
  CHECK(same_up_to_scalar(gcd(a * b, a * c), a));
  CHECK(same_up_to_scalar(gcd(a * c, b * c), c));
  CHECK(gcd(a, b).total_degree() == 0);
  CHECK(same_up_to_scalar(gcd(a * a * b, a * c), a));

  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial g = small_poly(rng, 3, 3);
    Polynomial u = small_poly(rng, 3, 3);
    Polynomial v = small_poly(rng, 3, 3);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    Polynomial d = gcd(g * u, g * v);
    // g divides the gcd, and the gcd divides both inputs.
    CHECK_NOTHROW(exact_quotient(d, g));
    CHECK_NOTHROW(exact_quotient(g * u, d));
    CHECK_NOTHROW(exact_quotient(g * v, d));
  }
}

}  // TEST_SUITE
