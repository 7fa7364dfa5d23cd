#include <doctest.h>

#include "kouch/error.hpp"
#include "kouch/milnor.hpp"
#include "kouch/model.hpp"
#include "kouch/newton.hpp"
#include "kouch/parser.hpp"
#include "support/generators.hpp"

using namespace kouch;
using namespace kouch::testing;

namespace {

GermData smooth_germ(const std::vector<std::vector<std::int64_t>>& inter) {
  return GermData(std::vector<Branch>(inter.size(), smooth_branch()), inter);
}

Decomposition witness_of(const GermData& g) {
  NGermResult r = ngerm_check(g);
  REQUIRE(r.verdict);
  return r.witness;
}

// {(C, y=0) \ (C, x=0)} for one irreducible factor.
NewtonDiagram axis_diagram(const Polynomial& factor) {
  long a = factor.restrict_y_zero().order();
  long b = factor.restrict_x_zero().order();
  return NewtonDiagram(elem(a < 0 ? ExtNat::infinity() : ExtNat(a),
                            b < 0 ? ExtNat::infinity() : ExtNat(b)));
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("cusp with seed 0") {
  GermData cusp({single_pair_branch(2, 3)}, {{0}});
  ModelEquation m = model_equation(cusp, witness_of(cusp));
  CHECK(m.polynomial == parse("y^2 - x^3"));
  REQUIRE(m.factors.size() == 1);
}

TEST_CASE("line below a cusp") {
  GermData g({smooth_branch(), single_pair_branch(2, 3)}, {{0, 2}, {2, 0}});
  ModelEquation m = model_equation(g, witness_of(g));
  CHECK(m.polynomial == parse("(y - x)*(y^2 - x^3)"));
  KouchnirenkoReport r = kouchnirenko_report(m.polynomial);
  CHECK(r.mu == 5);
  CHECK(r.nu == 5);
  CHECK(r.chart_nondegenerate);
}

TEST_CASE("smooth triple with contacts 2, 2, 3") {
  GermData g = smooth_germ({{0, 2, 2}, {2, 0, 3}, {2, 3, 0}});
  ModelEquation m = model_equation(g, witness_of(g));
  CHECK(m.polynomial == parse("(y - x^2)*(y - x^3)*(y - 2x^3)"));
  KouchnirenkoReport r = kouchnirenko_report(m.polynomial);
  CHECK(r.mu == 12);
  CHECK(r.nu == 12);
  ModelCheck check = verify_model(g, witness_of(g), m);
  CHECK(check.ok());
  CHECK(check.detail.empty());
}

TEST_CASE("infinite group contributes the factor y") {
  GermData g = smooth_germ({{0, 1}, {1, 0}});
  Decomposition w;
  w.groups.push_back({{0}, ExtRational(1)});
  w.groups.push_back({{1}, ExtRational::infinity()});
  ModelEquation m = model_equation(g, w);
  CHECK(m.polynomial == parse("(y - x)*y"));
}

TEST_CASE("non-witnesses are rejected") {
  GermData g = smooth_germ({{0, 2, 2}, {2, 0, 3}, {2, 3, 0}});
  Decomposition w;
  w.groups.push_back({{0, 1, 2}, ExtRational(2)});
  CHECK_THROWS_AS(model_equation(g, w), InputError);
}

TEST_CASE("verification notices a wrong model") {
  GermData g = smooth_germ({{0, 2}, {2, 0}});
  Decomposition w = witness_of(g);
  ModelEquation wrong;
  wrong.factors = {parse("y - x"), parse("y - 2x")};
  wrong.polynomial = wrong.factors[0] * wrong.factors[1];
  ModelCheck check = verify_model(g, w, wrong);
  CHECK_FALSE(check.ok());
  CHECK_FALSE(check.intersections_match);
  CHECK_FALSE(check.detail.empty());
}

TEST_CASE("random classes: factor diagrams, verification and seeds") {
  Rng rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    NGermInstance inst = random_ngerm(rng, 4, 7, 40);
    std::int64_t mu = milnor(inst.germ);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      ModelEquation m = model_equation(inst.germ, inst.witness, seed);
      REQUIRE(m.factors.size() == inst.germ.size());
      for (std::size_t i = 0; i < m.factors.size(); ++i) {
        // Each factor's diagram is fixed by its intersections with the axes.
        CHECK(diagram_of(m.factors[i]).same_region(axis_diagram(m.factors[i])));
      }
      ModelCheck check = verify_model(inst.germ, inst.witness, m);
      CHECK(check.ok());
      CHECK(diagram_of(m.polynomial).same_region(model_diagram(inst.germ, inst.witness)));
      ReportOptions fast;
      fast.oracle = OracleChoice::resultant;
      KouchnirenkoReport r = kouchnirenko_report(m.polynomial, fast);
      CHECK(r.mu == mu);
      CHECK(r.nu == mu);
      CHECK(r.chart_nondegenerate);
    }
  }
}

TEST_CASE("implicit equations of Puiseux series") {
  PuiseuxSeries cusp{2, {{make_rational(3, 2), Rational(1)}}};
  CHECK(implicit_equation(cusp) == parse("y^2 - x^3"));
  PuiseuxSeries line{1, {{Rational(2), Rational(3)}}};
  CHECK(implicit_equation(line) == parse("y - 3x^2"));
  PuiseuxSeries two_terms{2, {{Rational(1), Rational(1)}, {make_rational(3, 2), Rational(1)}}};
  // (y - x)^2 - x^3
  CHECK(implicit_equation(two_terms) == parse("(y - x)^2 - x^3"));
}

TEST_CASE("classes that are not N-germs can still be realized") {
  GermData g({single_pair_branch(2, 3), single_pair_branch(2, 3)}, {{0, 8}, {8, 0}});
  ModelEquation m = realize_germ(g, 0);
  REQUIRE(m.factors.size() == 2);
  CHECK(local_intersection(m.factors[0], m.factors[1]).value == 8);
  ReportOptions fast;
  fast.oracle = OracleChoice::resultant;
  KouchnirenkoReport r = kouchnirenko_report(m.polynomial, fast);
  CHECK(r.mu == 19);
  CHECK(r.nu < r.mu);
  CHECK_FALSE(r.chart_nondegenerate);

  GermData two_pairs({Branch{{{2, 3}, {2, 7}}, std::nullopt}}, {{0}});
  CHECK_THROWS_AS(realize_germ(two_pairs), UnsupportedError);
}

TEST_CASE("realized random classes carry their intersection numbers") {
  Rng rng(101);
  int realized = 0;
  for (int trial = 0; trial < 40; ++trial) {
    GermData g = random_valid_germ(rng, 3, false);
    if (!milnor_computable(g) || milnor(g) > 40) continue;
    // Validation does not rule out every impossible class (a cusp and a
    // smooth branch cannot meet with multiplicity 4); those are refused.
    ModelEquation m;
    try {
      m = realize_germ(g, static_cast<std::uint64_t>(trial));
    } catch (const UnsupportedError&) {
      continue;
    }
    ++realized;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        CHECK(local_intersection(m.factors[i], m.factors[j]).value == g.intersection(i, j));
    ReportOptions fast;
    fast.oracle = OracleChoice::resultant;
    CHECK(kouchnirenko_report(m.polynomial, fast).mu == milnor(g));
  }
  CHECK(realized > 10);
}

}  // TEST_SUITE
