#include "kouch/milnor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kouch/error.hpp"

namespace kouch {
namespace {

struct Unimodular {
  std::int64_t a, b, c, d;
};

Unimodular draw_change(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    Unimodular m{entry(rng), entry(rng), entry(rng), entry(rng)};
    std::int64_t det = m.a * m.d - m.b * m.c;
    if (det == 1 || det == -1) return m;
  }
}

bool y_regular_at_origin_line(const PolyY& p) {
  return !p.is_zero() && p.leading()[0] != 0;
}

}  // namespace

LocalIntersection local_intersection(const Polynomial& p, const Polynomial& q,
                                     std::uint64_t seed) {
  if (p.constant_term() != 0 || q.constant_term() != 0) return {};
  if (p.is_zero() || q.is_zero())
    throw OracleError("non-isolated intersection: a curve is identically zero");

  Polynomial common = gcd(p, q);
  Polynomial p0 = p;
  Polynomial q0 = q;
  if (common.total_degree() > 0) {
    if (common.constant_term() == 0)
      throw OracleError("non-isolated intersection: common factor through "
                        "the origin");
    // A unit in the local ring.
    p0 = exact_quotient(p, common);
    q0 = exact_quotient(q, common);
  }

  std::mt19937_64 rng(seed);
  Unimodular change{1, 0, 0, 1};
  for (int draw = 1; draw <= kLinearChangeDraws; ++draw) {
    if (draw > 1) change = draw_change(rng);
    PolyY py(p0.linear_substitution(change.a, change.b, change.c, change.d));
    PolyY qy(q0.linear_substitution(change.a, change.b, change.c, change.d));
    if (!y_regular_at_origin_line(py) || !y_regular_at_origin_line(qy))
      continue;
    UPoly shared = gcd(py.at_x_zero(), qy.at_x_zero());
    if (shared.degree() > 0 && shared.order() != shared.degree()) continue;

    UPoly res = resultant_y(py, qy);
    if (res.is_zero())
      throw InvariantViolation("resultant vanished after removing the gcd");
    LocalIntersection out;
    out.value = res.order();
    out.a = change.a;
    out.b = change.b;
    out.c = change.c;
    out.d = change.d;
    out.draws = draw;
    return out;
  }
  throw OracleError("no admissible linear change of coordinates after " +
                    std::to_string(kLinearChangeDraws) + " draws");
}

ResultantMilnor milnor_resultant_detailed(const Polynomial& f,
                                          std::uint64_t seed) {
  require_germ(f);
  LocalIntersection li;
  try {
    li = local_intersection(f.derivative_x(), f.derivative_y(), seed);
  } catch (const OracleError& e) {
    throw OracleError(std::string("Milnor number: ") + e.what());
  }
  return {li.value, li.a, li.b, li.c, li.d, li.draws};
}

std::int64_t milnor_resultant(const Polynomial& f, std::uint64_t seed) {
  return milnor_resultant_detailed(f, seed).mu;
}

namespace {

// Monomials of degree < level, indexed by increasing degree then by the
// power of x.
int monomial_index(int alpha, int beta) {
  int d = alpha + beta;
  return d * (d + 1) / 2 + alpha;
}

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

SparseRow row_of(const Polynomial& generator, int shift_alpha, int shift_beta,
                 int level) {
  SparseRow row;
  for (const auto& [m, c] : generator.terms()) {
    int a = m.alpha + shift_alpha;
    int b = m.beta + shift_beta;
    if (a + b < level) row.emplace_back(monomial_index(a, b), c);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return row;
}

// row -= factor * pivot, both sorted.
SparseRow subtract(const SparseRow& row, const Rational& factor,
                   const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ColengthProfile jacobian_colength_profile(const Polynomial& f, int level) {
  const Polynomial fx = f.derivative_x();
  const Polynomial fy = f.derivative_y();
  std::map<int, SparseRow> pivots;  // lowest column -> normalized row

  auto insert = [&](SparseRow row) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Rational inv = 1 / row.front().second;
        for (auto& [col, v] : row) v *= inv;
        pivots.emplace(row.front().first, std::move(row));
        return;
      }
      Rational factor = row.front().second;
      row = subtract(row, factor, it->second);
    }
  };

  for (const Polynomial* gen : {&fx, &fy}) {
    int low = gen->order();
    if (low < 0) continue;
    for (int d = 0; d + low < level; ++d)
      for (int a = 0; a <= d; ++a) insert(row_of(*gen, a, d - a, level));
  }

  ColengthProfile profile;
  std::vector<int> pivots_by_degree(static_cast<std::size_t>(level), 0);
  for (const auto& [col, row] : pivots) {
    int d = 0;
    while (monomial_index(0, d + 1) <= col) ++d;
    ++pivots_by_degree[static_cast<std::size_t>(d)];
  }
  std::int64_t monomials = 0;
  std::int64_t rank = 0;
  profile.codimension.push_back(0);
  for (int n = 1; n <= level; ++n) {
    monomials += n;  // degree n - 1 contributes n monomials
    rank += pivots_by_degree[static_cast<std::size_t>(n - 1)];
    profile.codimension.push_back(monomials - rank);
  }
  for (int n = 0; n + 2 <= level; ++n) {
    const auto& c = profile.codimension;
    if (c[static_cast<std::size_t>(n)] == c[static_cast<std::size_t>(n + 1)] &&
        c[static_cast<std::size_t>(n + 1)] ==
            c[static_cast<std::size_t>(n + 2)]) {
      profile.stabilized_at = n;
      break;
    }
  }
  return profile;
}

std::int64_t milnor_linear_algebra(const Polynomial& f, int degree_cap) {
  require_germ(f);
  int level = std::min(8, degree_cap);
  while (true) {
    ColengthProfile profile = jacobian_colength_profile(f, level);
    if (profile.stabilized_at >= 0)
      return profile.codimension[static_cast<std::size_t>(profile.stabilized_at)];
    if (level >= degree_cap)
      throw OracleError("Jacobian colength did not stabilize below degree " +
                        std::to_string(degree_cap) +
                        " (likely non-isolated singularity)");
    level = std::min(2 * level, degree_cap);
  }
}

KouchnirenkoReport kouchnirenko_report(const Polynomial& f,
                                       const ReportOptions& options) {
  require_germ(f);
  if (!is_reduced_at_origin(f))
    throw InputError("polynomial has a multiple factor through the origin");
  KouchnirenkoReport report;
  if (options.oracle != OracleChoice::linear)
    report.mu_resultant = milnor_resultant(f, options.seed);
  if (options.oracle != OracleChoice::resultant)
    report.mu_linear = milnor_linear_algebra(f, options.degree_cap);
  if (report.mu_resultant >= 0 && report.mu_linear >= 0 &&
      report.mu_resultant != report.mu_linear) {
    throw InvariantViolation(
        "Milnor oracles disagree: resultant " +
        std::to_string(report.mu_resultant) + ", linear algebra " +
        std::to_string(report.mu_linear) + " for " + f.to_string());
  }
  report.mu = report.mu_resultant >= 0 ? report.mu_resultant : report.mu_linear;

  report.diagram = diagram_of(f);
  report.nu = newton_number(report.diagram).value();
  report.chart_nondegenerate = true;
  for (auto& fp : faces(f)) {
    bool ok = face_nondegenerate(fp);
    report.chart_nondegenerate = report.chart_nondegenerate && ok;
    report.faces.push_back({fp.face, std::move(fp.u), ok});
  }
  if (report.mu < report.nu)
    throw InvariantViolation("mu < nu for " + f.to_string());
  if (report.equal() != report.chart_nondegenerate)
    throw InvariantViolation(
        "mu == nu disagrees with the face test for " + f.to_string());
  return report;
}

}  // namespace kouch
