#pragma once

// Static figures of a Newton diagram with the support of a polynomial.

#include <string>
#include <vector>

#include "kouch/diagram.hpp"

namespace kouch::cli {

enum class PointPosition { outside, boundary, interior };

PointPosition locate(const NewtonDiagram& diagram, const LatticePoint& p);

// Grid with beta upward. Legend:
//   V vertex, # support point on the boundary, + support point above it,
//   : boundary lattice point outside the support, . anything else.
std::string render_ascii(const NewtonDiagram& diagram,
                         const std::vector<LatticePoint>& support);

// 24 px per unit, alpha rightward, beta upward, axes drawn; the staircase is
// a polyline, support points are circles (filled on the boundary).
std::string render_svg(const NewtonDiagram& diagram,
                       const std::vector<LatticePoint>& support);

}  // namespace kouch::cli
