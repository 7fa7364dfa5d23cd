#include "kouch/newton.hpp"

#include <algorithm>

#include "kouch/error.hpp"

namespace kouch {

void require_germ(const Polynomial& f) {
  if (f.is_zero()) throw InputError("the zero polynomial does not define a germ");
  if (f.constant_term() != 0)
    throw InputError("f(0,0) != 0: the curve does not pass through the origin");
}

NewtonDiagram diagram_of(const Polynomial& f) {
  require_germ(f);
  std::vector<LatticePoint> points;
  for (const auto& m : f.support()) points.push_back({m.alpha, m.beta});
  std::sort(points.begin(), points.end());

  // Lower convex hull (Andrew's monotone chain), collinear points dropped.
  auto cross = [](const LatticePoint& o, const LatticePoint& a,
                  const LatticePoint& b) {
    return (a.alpha - o.alpha) * (b.beta - o.beta) -
           (a.beta - o.beta) * (b.alpha - o.alpha);
  };
  std::vector<LatticePoint> hull;
  for (const auto& p : points) {
    if (!hull.empty() && hull.back().alpha == p.alpha) continue;
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  // The Newton boundary is the strictly descending prefix of the lower hull.
  std::vector<LatticePoint> chain{hull.front()};
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (hull[i].beta >= chain.back().beta) break;
    chain.push_back(hull[i]);
  }
  return NewtonDiagram::from_vertices(chain);
}

std::vector<FacePolynomial> faces(const Polynomial& f) {
  std::vector<FacePolynomial> out;
  for (const Face& face : diagram_of(f).faces()) {
    std::vector<Rational> coeffs;
    for (std::int64_t k = 0; k <= face.segments; ++k) {
      LatticePoint p = face.point(k);
      coeffs.push_back(f.coefficient(static_cast<int>(p.alpha),
                                     static_cast<int>(p.beta)));
    }
    out.push_back({face, UPoly(std::move(coeffs))});
  }
  return out;
}

bool face_nondegenerate(const FacePolynomial& face) {
  UPoly g = gcd(face.u, face.u.derivative());
  long low = g.order();
  if (low > 0) {
    std::vector<Rational> stripped(g.coefficients().begin() + low,
                                   g.coefficients().end());
    g = UPoly(std::move(stripped));
  }
  return g.degree() <= 0;
}

bool is_reduced_at_origin(const Polynomial& f) {
  require_germ(f);
  Polynomial g = gcd(f, f.derivative_x());
  g = gcd(g, f.derivative_y());
  return g.constant_term() != 0;
}

bool chart_nondegenerate(const Polynomial& f) {
  if (!is_reduced_at_origin(f))
    throw InputError("polynomial has a multiple factor through the origin");
  for (const auto& fp : faces(f))
    if (!face_nondegenerate(fp)) return false;
  return true;
}

}  // namespace kouch
