#include <doctest.h>

#include "kouch/error.hpp"
#include "kouch/newton.hpp"
#include "kouch/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kouch;
using namespace kouch::testing;

namespace {

const ExtNat inf = ExtNat::infinity();

std::vector<LatticePoint> pts(std::initializer_list<LatticePoint> p) {
  return std::vector<LatticePoint>(p);
}

UPoly up(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto k : c) v.push_back(Rational(static_cast<long>(k)));
  return UPoly(v);
}

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("diagram of a polynomial") {
  CHECK(diagram_of(parse("y^2 - x^3")).same_region(NewtonDiagram(elem(3, 2))));
  NewtonDiagram d = diagram_of(parse("(y^2-x^3)*(y-x)"));
  CHECK(d.vertices() == pts({{0, 3}, {1, 2}, {4, 0}}));
  NewtonDiagram shifted = diagram_of(parse("x*(y^2-x^3)"));
  CHECK(shifted.same_region(NewtonDiagram(std::vector<ElementaryDiagram>{elem(1, inf), elem(3, 2)})));
  CHECK(shifted.canonical().x_offset == 1);
  CHECK_THROWS_AS(diagram_of(Polynomial()), InputError);
  CHECK_THROWS_AS(diagram_of(parse("1 + x")), InputError);
}

TEST_CASE("diagram vertices match the hull of the support") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_polynomial(rng);
    std::vector<LatticePoint> support;
    for (const Monomial& m : f.support()) support.push_back({m.alpha, m.beta});
    NewtonDiagram d = diagram_of(f);
    auto chain = d.vertices();
    CHECK(chain == staircase_hull(support));
  }
}

TEST_CASE("face polynomials") {
  auto cusp = faces(parse("y^2 - x^3"));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].u == up({1, -1}));

  auto two = faces(parse("(y^2-x^3)*(y-x)"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].face.from == LatticePoint{0, 3});
  CHECK(two[0].face.to == LatticePoint{1, 2});
  CHECK(two[0].u == up({1, -1}));  // y^3 - x y^2
  CHECK(two[1].face.from == LatticePoint{1, 2});
  CHECK(two[1].face.to == LatticePoint{4, 0});
  CHECK(two[1].u == up({-1, 1}));  // -x y^2 + x^4; (3,1) is off the face

  CHECK(faces(parse("x^2*y")).empty());
}

TEST_CASE("face nondegeneracy examples") {
  auto face_with = [](UPoly u) {
    FacePolynomial fp;
    fp.u = std::move(u);
    return fp;
  };
  CHECK(face_nondegenerate(face_with(up({1, -1}))));
  CHECK_FALSE(face_nondegenerate(face_with(up({1, 2, 1}))));
  CHECK(face_nondegenerate(face_with(up({1, 2, 0, 1}))));
  CHECK(face_nondegenerate(face_with(up({0, 0, 1, -1}))));  // t^2 (1 - t)
  CHECK_FALSE(face_nondegenerate(faces(parse("(x+y)^2 + x^3"))[0]));
}

TEST_CASE("face test agrees with the discriminant oracle") {
  Rng rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial f = random_polynomial(rng);
    for (const FacePolynomial& fp : faces(f))
      CHECK(face_nondegenerate(fp) == squarefree_in_torus(fp.u.coefficients()));
  }
  // Forced double roots: (t - r)^2 times something.
  for (int r = -3; r <= 3; ++r) {
    if (r == 0) continue;
    UPoly base = up({-r, 1});
    FacePolynomial fp;
    fp.u = base * base * up({1, 0, uniform(rng, 1, 5)});
    CHECK_FALSE(face_nondegenerate(fp));
    CHECK_FALSE(squarefree_in_torus(fp.u.coefficients()));
  }
}

TEST_CASE("chart nondegeneracy") {
  CHECK(chart_nondegenerate(parse("y^2 - x^3")));
  CHECK_FALSE(chart_nondegenerate(parse("(x+y)^2 + x^3")));
  CHECK(chart_nondegenerate(parse("(y^2-x^3)*(x^2-y^3)*(x+y)")));
  CHECK_THROWS_AS(chart_nondegenerate(parse("(y-x)^2*y")), InputError);
}

TEST_CASE("reducedness at the origin") {
  CHECK(is_reduced_at_origin(parse("y^2 - x^3")));
  CHECK_FALSE(is_reduced_at_origin(parse("(y-x)^2*y")));
  CHECK(is_reduced_at_origin(parse("(y-x)*(y+x)")));
  // A squared factor away from the origin does not matter.
  CHECK(is_reduced_at_origin(parse("(y-x)*(1+x)^2")));
  CHECK_FALSE(is_reduced_at_origin(parse("x^2*(y - x^3)")));
  CHECK(is_reduced_at_origin(parse("x*y")));
}

TEST_CASE("diagram of a product is the sum of the diagrams") {
  Rng rng(71);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_polynomial(rng, 6, 1, 4);
    Polynomial g = random_polynomial(rng, 6, 1, 4);
    if (gcd(f, g).total_degree() > 0) continue;
    ++checked;
    CHECK(diagram_of(f * g).same_region(diagram_of(f) + diagram_of(g)));
  }
  CHECK(checked > 150);
}

}  // TEST_SUITE
