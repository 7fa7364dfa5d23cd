#include <doctest.h>

#include "kouch/classify.hpp"
#include "kouch/error.hpp"
#include "support/generators.hpp"

using namespace kouch;
using namespace kouch::testing;

namespace {

GermData smooth_germ(const std::vector<std::vector<std::int64_t>>& inter) {
  return GermData(std::vector<Branch>(inter.size(), smooth_branch()), inter);
}

GermData ordinary(std::size_t m) {
  std::vector<std::vector<std::int64_t>> inter(m, std::vector<std::int64_t>(m, 1));
  for (std::size_t i = 0; i < m; ++i) inter[i][i] = 0;
  return smooth_germ(inter);
}

const GermData cusp({single_pair_branch(2, 3)}, {{0}});
const GermData cusp_line({smooth_branch(), single_pair_branch(2, 3)}, {{0, 2}, {2, 0}});
const GermData triple_223 = smooth_germ({{0, 2, 2}, {2, 0, 3}, {2, 3, 0}});
const GermData two_pairs({Branch{{{2, 3}, {2, 7}}, std::nullopt}}, {{0}});
const GermData cusps_contact2({single_pair_branch(2, 3), single_pair_branch(2, 3)},
                              {{0, 8}, {8, 0}});
const GermData three_cusps({single_pair_branch(2, 3), single_pair_branch(2, 3),
                            single_pair_branch(2, 3)},
                           {{0, 4, 4}, {4, 0, 4}, {4, 4, 0}});

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("curated N-germ verdicts") {
  NGermResult c = ngerm_check(cusp);
  REQUIRE(c.verdict);
  REQUIRE(c.witness.groups.size() == 1);
  CHECK(c.witness.groups[0].exponent == ExtRational(make_rational(3, 2)));

  NGermResult tp = ngerm_check(two_pairs);
  CHECK_FALSE(tp.verdict);
  CHECK(tp.refutation.find("branch 1") != std::string::npos);

  NGermResult cl = ngerm_check(cusp_line);
  REQUIRE(cl.verdict);
  REQUIRE(cl.witness.groups.size() == 2);
  CHECK(cl.witness.groups[0].branches == std::vector<std::size_t>{0});
  CHECK(cl.witness.groups[0].exponent == ExtRational(1));
  CHECK(cl.witness.groups[1].exponent == ExtRational(make_rational(3, 2)));

  NGermResult t = ngerm_check(triple_223);
  REQUIRE(t.verdict);
  REQUIRE(t.witness.groups.size() == 2);
  CHECK(t.witness.groups[0].branches == std::vector<std::size_t>{0});
  CHECK(t.witness.groups[0].exponent == ExtRational(2));
  CHECK(t.witness.groups[1].branches == std::vector<std::size_t>{1, 2});
  CHECK(t.witness.groups[1].exponent == ExtRational(3));

  NGermResult cc = ngerm_check(cusps_contact2);
  CHECK_FALSE(cc.verdict);
  CHECK_FALSE(cc.refutation.empty());

  CHECK(ngerm_check(GermData({smooth_branch()}, {{0}})).verdict);
  CHECK_THROWS_AS(ngerm_check(GermData({single_pair_branch(2, 3), single_pair_branch(2, 3)},
                                       {{0, 3}, {3, 0}})),
                  InputError);
}

TEST_CASE("literal exponent semantics") {
  // A lone smooth branch below a cusp needs a finite exponent, which the
  // literal reading forbids.
  CHECK_FALSE(ngerm_check(cusp_line, ExponentSemantics::literal).verdict);
  CHECK_FALSE(ngerm_reference_check(cusp_line, ExponentSemantics::literal).verdict);
  CHECK(ngerm_check(cusp, ExponentSemantics::literal).verdict);
  GermData two_lines = smooth_germ({{0, 2}, {2, 0}});
  CHECK(ngerm_check(two_lines, ExponentSemantics::literal).verdict);
}

TEST_CASE("witness checking") {
  Decomposition w;
  w.groups.push_back({{0}, ExtRational(2)});
  w.groups.push_back({{1, 2}, ExtRational(3)});
  CHECK_FALSE(check_witness(triple_223, w).has_value());
  Decomposition swapped = w;
  swapped.groups[1].exponent = ExtRational(4);
  CHECK(check_witness(triple_223, swapped).has_value());
  Decomposition missing;
  missing.groups.push_back({{0, 1}, ExtRational(2)});
  CHECK(check_witness(triple_223, missing).has_value());
  Decomposition decreasing;
  decreasing.groups.push_back({{1, 2}, ExtRational(3)});
  decreasing.groups.push_back({{0}, ExtRational(2)});
  CHECK(check_witness(triple_223, decreasing).has_value());
}

TEST_CASE("structural check agrees with the exhaustive reference") {
  Rng rng(79);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    GermData g = random_valid_germ(rng, 6);
    for (auto semantics : {ExponentSemantics::relaxed, ExponentSemantics::literal}) {
      NGermResult fast = ngerm_check(g, semantics);
      NGermResult ref = ngerm_reference_check(g, semantics);
      CHECK(fast.verdict == ref.verdict);
      if (fast.verdict) {
        CHECK_FALSE(check_witness(g, fast.witness, semantics).has_value());
        CHECK(fast.witness.groups.size() == ref.witness.groups.size());
        if (semantics == ExponentSemantics::relaxed) ++positives;
      }
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("reference check refuses large inputs") {
  CHECK_THROWS_AS(ngerm_reference_check(ordinary(kReferenceBranchLimit + 1)),
                  UnsupportedError);
}

TEST_CASE("nondegeneracy verdicts") {
  NondegeneracyResult three = nondegenerate_verdict(three_cusps);
  CHECK_FALSE(three.verdict);
  CHECK(three.components.size() == 3);
  CHECK(three.nonsmooth_count == 3);
  for (const auto& c : three.components) CHECK(c.ngerm.verdict);
  CHECK(milnor(three_cusps) == 28);
  GermNewtonNumber nu = newton_number_germ(three_cusps);
  CHECK(nu.exact);
  CHECK(nu.value == 27);

  for (std::size_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    GermData g = ordinary(m);
    CHECK(milnor(g) == static_cast<std::int64_t>((m - 1) * (m - 1)));
    CHECK(is_ordinary(g));
    CHECK(nondegenerate_verdict(g).verdict);
    GermNewtonNumber n = newton_number_germ(g);
    CHECK(n.exact);
    CHECK(n.value == milnor(g));
  }

  CHECK(nondegenerate_verdict(cusp).verdict);
  CHECK(nondegenerate_verdict(cusp_line).verdict);
  CHECK_FALSE(nondegenerate_verdict(cusps_contact2).verdict);
  CHECK_FALSE(newton_number_germ(cusps_contact2).exact);
  CHECK_FALSE(nondegenerate_verdict(two_pairs).verdict);

  // Two cusps with different tangents: two non-smooth components is allowed.
  GermData two_transversal({single_pair_branch(2, 3), single_pair_branch(2, 3)},
                           {{0, 4}, {4, 0}});
  CHECK(nondegenerate_verdict(two_transversal).verdict);
}

TEST_CASE("model diagrams and the Milnor formula of a witness") {
  NGermResult cl = ngerm_check(cusp_line);
  NewtonDiagram d = model_diagram(cusp_line, cl.witness);
  CHECK(d.same_region(NewtonDiagram(std::vector<ElementaryDiagram>{elem(1, 1), elem(3, 2)})));
  CHECK(newton_number(d) == ExtNat(5));
  CHECK(milnor_from_witness(cusp_line, cl.witness) == 5);

  NGermResult t = ngerm_check(triple_223);
  CHECK(milnor_from_witness(triple_223, t.witness) == 12);
  CHECK(newton_number(model_diagram(triple_223, t.witness)) == ExtNat(12));

  Decomposition bogus;
  bogus.groups.push_back({{0, 1, 2}, ExtRational(2)});
  CHECK_THROWS_AS(model_diagram(triple_223, bogus), InputError);

  GermData line_top({smooth_branch(), smooth_branch()}, {{0, 1}, {1, 0}});
  Decomposition top;
  top.groups.push_back({{0}, ExtRational(1)});
  top.groups.push_back({{1}, ExtRational::infinity()});
  REQUIRE_FALSE(check_witness(line_top, top).has_value());
  CHECK(model_diagram(line_top, top).same_region(
      NewtonDiagram(std::vector<ElementaryDiagram>{elem(1, 1), elem(ExtNat::infinity(), 1)})));
}

TEST_CASE("witness Milnor formula, model diagram and intrinsic data agree") {
  Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    NGermInstance inst = random_ngerm(rng);
    REQUIRE_FALSE(check_witness(inst.germ, inst.witness).has_value());
    std::int64_t mu = milnor(inst.germ);
    CHECK(milnor_from_witness(inst.germ, inst.witness) == mu);
    CHECK(newton_number(model_diagram(inst.germ, inst.witness)) == ExtNat(mu));
    NGermResult r = ngerm_check(inst.germ);
    REQUIRE(r.verdict);
    CHECK(milnor_from_witness(inst.germ, r.witness) == mu);
    GermNewtonNumber nu = newton_number_germ(inst.germ);
    CHECK(nu.exact);
    CHECK(nu.value == mu);
  }
}

TEST_CASE("verdicts do not depend on branch order") {
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    GermData g = random_valid_germ(rng, 6);
    GermData p = g.permuted(random_permutation(rng, g.size()));
    CHECK(ngerm_check(g).verdict == ngerm_check(p).verdict);
    NondegeneracyResult a = nondegenerate_verdict(g);
    NondegeneracyResult b = nondegenerate_verdict(p);
    CHECK(a.verdict == b.verdict);
    CHECK(a.nonsmooth_count == b.nonsmooth_count);
    CHECK(a.components.size() == b.components.size());
    if (milnor_computable(g)) {
      GermNewtonNumber na = newton_number_germ(g);
      GermNewtonNumber nb = newton_number_germ(p);
      CHECK(na.value == nb.value);
      CHECK(na.exact == nb.exact);
    }
  }
}

}  // TEST_SUITE
