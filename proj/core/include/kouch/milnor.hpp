#pragma once

// Two independent routes to the Milnor number of a reduced germ f at the
// origin, and the Kouchnirenko comparison mu >= nu(Delta(f)).

#include <cstdint>
#include <vector>

#include "kouch/diagram.hpp"
#include "kouch/newton.hpp"
#include "kouch/polynomial.hpp"

namespace kouch {

inline constexpr int kDefaultDegreeCap = 60;
inline constexpr int kLinearChangeDraws = 20;

struct LocalIntersection {
  std::int64_t value = 0;
  // Coordinate change (x, y) -> (a x + b y, c x + d y) that was accepted.
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  int draws = 0;
};

// Intersection multiplicity at the origin of {p = 0} and {q = 0} as
// ord_x Res_y after a seeded unimodular linear change (identity first),
// accepted once both are y-regular at x = 0 and their restrictions to x = 0
// share no root other than y = 0. A common factor that is a unit at the
// origin is divided out. Throws OracleError when p and q share a factor
// through the origin or after kLinearChangeDraws rejected changes.
LocalIntersection local_intersection(const Polynomial& p, const Polynomial& q,
                                     std::uint64_t seed = 0);

struct ResultantMilnor {
  std::int64_t mu = 0;
  // Coordinate change (x, y) -> (a x + b y, c x + d y) that was accepted.
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  int draws = 0;
};

// mu = ord_x Res_y(g_x, g_y) with g = f after a seeded unimodular linear
// change; see local_intersection for the acceptance rule. Throws OracleError
// for a non-isolated singularity or after kLinearChangeDraws rejected
// changes.
ResultantMilnor milnor_resultant_detailed(const Polynomial& f,
                                          std::uint64_t seed = 0);
std::int64_t milnor_resultant(const Polynomial& f, std::uint64_t seed = 0);

struct ColengthProfile {
  // codimension[N] = dim Q[x,y] / (J + m^N) for N = 0..level.
  std::vector<std::int64_t> codimension;
  int stabilized_at = -1;  // first N with three equal consecutive values
};

// Codimension profile of the Jacobian ideal modulo powers of the maximal
// ideal, computed by exact elimination up to `level`.
ColengthProfile jacobian_colength_profile(const Polynomial& f, int level);

// mu as the stable value of dim Q[x,y] / (J + m^N), increasing N until
// three consecutive values agree. Throws OracleError when no stabilization
// happens with N <= degree_cap.
std::int64_t milnor_linear_algebra(const Polynomial& f,
                                   int degree_cap = kDefaultDegreeCap);

enum class OracleChoice { resultant, linear, both };

struct ReportOptions {
  OracleChoice oracle = OracleChoice::both;
  int degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 0;
};

struct FaceReport {
  Face face;
  UPoly u;
  bool nondegenerate = false;
};

struct KouchnirenkoReport {
  std::int64_t mu = 0;
  std::int64_t mu_resultant = -1;  // -1 when that oracle was not run
  std::int64_t mu_linear = -1;
  std::int64_t nu = 0;
  NewtonDiagram diagram;
  std::vector<FaceReport> faces;
  bool chart_nondegenerate = false;

  bool equal() const { return mu == nu; }
};

// Throws InputError when f is not a reduced germ, OracleError when the
// oracles fail, InvariantViolation when they disagree or mu >= nu or
// (mu == nu) <=> nondegenerate fails.
KouchnirenkoReport kouchnirenko_report(const Polynomial& f,
                                       const ReportOptions& options = {});

}  // namespace kouch
