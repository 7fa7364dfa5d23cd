#include "render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kouch::cli {
namespace {

struct Extent {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

Extent extent(const NewtonDiagram& diagram,
              const std::vector<LatticePoint>& support) {
  Extent e;
  for (const LatticePoint& p : diagram.vertices()) {
    e.alpha = std::max(e.alpha, p.alpha);
    e.beta = std::max(e.beta, p.beta);
  }
  for (const LatticePoint& p : support) {
    e.alpha = std::max(e.alpha, p.alpha);
    e.beta = std::max(e.beta, p.beta);
  }
  // One spare unit so the unbounded sides stay visible.
  e.alpha += 1;
  e.beta += 1;
  return e;
}

}  // namespace

PointPosition locate(const NewtonDiagram& diagram, const LatticePoint& p) {
  const CanonicalForm& c = diagram.canonical();
  if (p.alpha < c.x_offset || p.beta < c.y_offset) return PointPosition::outside;
  bool on_edge = p.alpha == c.x_offset || p.beta == c.y_offset;
  for (const Face& f : diagram.faces()) {
    std::int64_t lhs = f.v * p.alpha + f.u * p.beta;
    std::int64_t rhs = f.v * f.from.alpha + f.u * f.from.beta;
    if (lhs < rhs) return PointPosition::outside;
    if (lhs == rhs) on_edge = true;
  }
  return on_edge ? PointPosition::boundary : PointPosition::interior;
}

std::string render_ascii(const NewtonDiagram& diagram,
                         const std::vector<LatticePoint>& support) {
  Extent e = extent(diagram, support);
  std::set<LatticePoint> in_support(support.begin(), support.end());
  auto vs = diagram.vertices();
  std::set<LatticePoint> vertices(vs.begin(), vs.end());

  int label = static_cast<int>(std::to_string(e.beta).size());
  std::ostringstream out;
  for (std::int64_t beta = e.beta; beta >= 0; --beta) {
    std::string num = std::to_string(beta);
    out << std::string(label - num.size(), ' ') << num << " |";
    for (std::int64_t alpha = 0; alpha <= e.alpha; ++alpha) {
      LatticePoint p{alpha, beta};
      PointPosition where = locate(diagram, p);
      bool hit = in_support.count(p) > 0;
      char ch = '.';
      if (vertices.count(p))
        ch = 'V';
      else if (hit && where == PointPosition::boundary)
        ch = '#';
      else if (hit)
        ch = '+';
      else if (where == PointPosition::boundary)
        ch = ':';
      out << ' ' << ch;
    }
    out << '\n';
  }
  out << std::string(label, ' ') << " +" << std::string(2 * (e.alpha + 1), '-')
      << '\n';
  out << std::string(label, ' ') << "  ";
  for (std::int64_t alpha = 0; alpha <= e.alpha; ++alpha)
    out << ' ' << (alpha % 10);
  out << '\n';
  return out.str();
}

std::string render_svg(const NewtonDiagram& diagram,
                       const std::vector<LatticePoint>& support) {
  constexpr int unit = 24;
  Extent e = extent(diagram, support);
  const std::int64_t width = (e.alpha + 2) * unit;
  const std::int64_t height = (e.beta + 2) * unit;
  auto sx = [&](std::int64_t alpha) { return (alpha + 1) * unit; };
  auto sy = [&](std::int64_t beta) { return height - (beta + 1) * unit; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  // axes
  out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(e.alpha) << "\" y2=\"" << sy(0)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0)
      << "\" y2=\"" << sy(e.beta) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  auto vs = diagram.vertices();
  std::ostringstream chain;
  chain << sx(vs.front().alpha) << ',' << sy(e.beta);
  for (const LatticePoint& p : vs) chain << ' ' << sx(p.alpha) << ',' << sy(p.beta);
  chain << ' ' << sx(e.alpha) << ',' << sy(vs.back().beta);
  out << "  <polygon points=\"" << chain.str() << ' ' << sx(e.alpha) << ','
      << sy(e.beta) << "\" fill=\"#e8e8e8\" stroke=\"none\"/>\n";
  out << "  <polyline points=\"" << chain.str()
      << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";

  for (const LatticePoint& p : support) {
    bool boundary = locate(diagram, p) == PointPosition::boundary;
    out << "  <circle cx=\"" << sx(p.alpha) << "\" cy=\"" << sy(p.beta)
        << "\" r=\"4\" fill=\"" << (boundary ? "#1f4e9c" : "white")
        << "\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kouch::cli
