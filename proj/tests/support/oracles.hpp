#pragma once

// Independent reference computations used only by tests. None of these call
// into the library routine they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kouch/diagram.hpp"
#include "kouch/polynomial.hpp"
#include "kouch/rational.hpp"

namespace kouch::testing {

// Twice the area of a simple polygon (absolute value).
inline std::int64_t twice_area(const std::vector<LatticePoint>& poly) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    s += p.alpha * q.beta - q.alpha * p.beta;
  }
  return s < 0 ? -s : s;
}

// Twice the area enclosed by the axes and a convenient staircase running
// from (0, b) to (a, 0).
inline std::int64_t twice_area_under(const std::vector<LatticePoint>& chain) {
  std::vector<LatticePoint> poly{{0, 0}};
  poly.insert(poly.end(), chain.begin(), chain.end());
  return twice_area(poly);
}

// nu = 2S - a - b + 1 for a staircase touching both axes.
inline std::int64_t shoelace_newton_number(
    const std::vector<LatticePoint>& chain) {
  std::int64_t a = chain.back().alpha;
  std::int64_t b = chain.front().beta;
  return twice_area_under(chain) - a - b + 1;
}

// Lower-left convex staircase of a finite point set (Andrew's monotone
// chain on the lower hull, then the strictly descending part).
inline std::vector<LatticePoint> staircase_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      std::int64_t cross = (a.alpha - o.alpha) * (p.beta - o.beta) -
                           (a.beta - o.beta) * (p.alpha - o.alpha);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  // Keep the part with strictly decreasing ordinate, starting at the lowest
  // point of the leftmost column.
  std::vector<LatticePoint> out;
  for (const auto& p : hull) {
    if (!out.empty() && p.beta >= out.back().beta) break;
    out.push_back(p);
  }
  return out;
}

// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// Sylvester resultant of two univariate coefficient vectors (index = power),
// both with nonzero leading coefficient.
inline Rational sylvester_resultant(const std::vector<Rational>& p,
                                    const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return determinant(std::move(s));
}

// f(x0, y) as coefficients in y, trimmed.
inline std::vector<Rational> specialize_x(const Polynomial& f,
                                          const Rational& x0) {
  std::vector<Rational> out;
  for (const auto& [m, c] : f.terms()) {
    if (out.size() <= static_cast<std::size_t>(m.beta))
      out.resize(static_cast<std::size_t>(m.beta) + 1);
    Rational power(1);
    for (int k = 0; k < m.alpha; ++k) power *= x0;
    out[static_cast<std::size_t>(m.beta)] += c * power;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Nondegeneracy of a face coefficient vector: after removing powers of t,
// the discriminant (resultant with the derivative) is nonzero.
inline bool squarefree_in_torus(std::vector<Rational> u) {
  while (!u.empty() && u.front() == 0) u.erase(u.begin());
  while (!u.empty() && u.back() == 0) u.pop_back();
  if (u.size() <= 2) return true;
  std::vector<Rational> du;
  for (std::size_t k = 1; k < u.size(); ++k)
    du.push_back(u[k] * Rational(static_cast<long>(k)));
  return sylvester_resultant(u, du) != 0;
}

// Milnor number from branch data recomputed from scratch for branches with at most one pair:
// mu(branch (a,b)) = (a-1)(b-1), smooth 0.
inline std::int64_t milnor_formula(
    const std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>>&
        pairs,
    const std::vector<std::vector<std::int64_t>>& inter) {
  std::int64_t s = static_cast<std::int64_t>(pairs.size());
  std::int64_t total = 0;
  for (const auto& p : pairs)
    if (p) total += (p->first - 1) * (p->second - 1);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) total += 2 * inter[i][j];
  return total - s + 1;
}

}  // namespace kouch::testing
