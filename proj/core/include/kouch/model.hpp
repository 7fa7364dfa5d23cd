#pragma once

// Polynomials realizing a prescribed equisingularity class.
//
// model_equation follows a witness: one factor y^a - c x^b per branch of a
// group with non-integral exponent b/a, y - c x^e for integral e, and y for
// the infinite group. The result is verified before it is returned.
//
// realize_germ handles classes that are not N-germs (used by cross-checks):
// it builds one Puiseux series per branch whose pairwise agreements produce
// the prescribed intersection numbers, then implicitizes each series.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kouch/classify.hpp"
#include "kouch/germ.hpp"
#include "kouch/polynomial.hpp"
#include "kouch/rational.hpp"

namespace kouch {

struct ModelEquation {
  Polynomial polynomial;
  std::vector<Polynomial> factors;  // factors[i] defines branch i
};

struct ModelCheck {
  bool diagram_matches = false;
  bool chart_nondegenerate = false;
  bool transversal = false;  // ord_y f(0, y) equals the order of f
  bool intersections_match = false;
  std::string detail;  // first failure, empty when everything holds

  bool ok() const {
    return diagram_matches && chart_nondegenerate && transversal &&
           intersections_match;
  }
};

// Pairwise intersection numbers of the factors against the germ, plus the
// diagram, face and transversality checks.
ModelCheck verify_model(const GermData& germ, const Decomposition& witness,
                        const ModelEquation& model);

// Seed 0 uses the coefficients 1, 2, 3, ... inside each group; any other
// seed draws distinct small nonzero rationals. Throws InputError for a
// non-witness and InvariantViolation if verification fails.
ModelEquation model_equation(const GermData& germ, const Decomposition& witness,
                             std::uint64_t seed = 0);

// y = sum c_k x^(e_k), with every e_k * ramification integral.
struct SeriesTerm {
  Rational exponent;
  Rational coefficient;
};

struct PuiseuxSeries {
  std::int64_t ramification = 1;
  std::vector<SeriesTerm> terms;  // increasing exponent
};

// Monic in y of degree `ramification`: the product of y - s(zeta x^(1/n))
// over the n-th roots of unity, computed as a characteristic polynomial
// over Q[x].
Polynomial implicit_equation(const PuiseuxSeries& series);

// Series with the branch data of `germ`; only branches with at most one
// characteristic pair are supported. Throws UnsupportedError when the class
// cannot be realized this way.
std::vector<PuiseuxSeries> realize_series(const GermData& germ,
                                          std::uint64_t seed = 0);

// Product of the implicit equations, with pairwise intersections checked
// against the germ (UnsupportedError on mismatch).
ModelEquation realize_germ(const GermData& germ, std::uint64_t seed = 0);

}  // namespace kouch
