#include "kouch/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kouch {

std::int64_t ExtNat::value() const {
  if (infinite_) throw std::logic_error("value() of infinite ExtNat");
  return value_;
}

std::string ExtNat::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(a.value_ + b.value_);
}

ExtNat operator*(ExtNat a, ExtNat b) {
  if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0))
    return ExtNat(0);
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(a.value_ * b.value_);
}

std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

ExtNat min(ExtNat a, ExtNat b) { return a <= b ? a : b; }

ElementaryDiagram elem(ExtNat a, ExtNat b) {
  if (a.is_infinite() && b.is_infinite())
    throw std::invalid_argument("elementary diagram {inf\\inf} is undefined");
  if ((a.is_finite() && a.value() < 1) || (b.is_finite() && b.value() < 1))
    throw std::invalid_argument("elementary diagram extents must be >= 1");
  return {a, b};
}

CanonicalForm canonicalize(std::span<const ElementaryDiagram> terms) {
  CanonicalForm form;
  std::vector<Edge> edges;
  for (const auto& t : terms) {
    if (t.b.is_infinite()) {
      form.x_offset += t.a.value();
    } else if (t.a.is_infinite()) {
      form.y_offset += t.b.value();
    } else {
      edges.push_back({t.a.value(), t.b.value()});
    }
  }
  // Increasing inclination width/height; compare w1*h2 < w2*h1.
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
    return l.width * r.height < r.width * l.height;
  });
  for (const auto& e : edges) {
    if (!form.edges.empty()) {
      Edge& last = form.edges.back();
      if (last.width * e.height == e.width * last.height) {
        last.width += e.width;
        last.height += e.height;
        continue;
      }
    }
    form.edges.push_back(e);
  }
  return form;
}

NewtonDiagram::NewtonDiagram(const ElementaryDiagram& term)
    : NewtonDiagram(std::vector<ElementaryDiagram>{term}) {}

NewtonDiagram::NewtonDiagram(std::vector<ElementaryDiagram> terms)
    : terms_(std::move(terms)) {
  for (const auto& t : terms_) elem(t.a, t.b);
  canonical_ = canonicalize(terms_);
}

NewtonDiagram NewtonDiagram::from_vertices(
    std::span<const LatticePoint> vertices) {
  if (vertices.empty())
    throw std::invalid_argument("vertex list must not be empty");
  for (const auto& p : vertices) {
    if (p.alpha < 0 || p.beta < 0)
      throw std::invalid_argument("vertices must lie in the quadrant");
  }
  std::vector<ElementaryDiagram> terms;
  if (vertices.front().alpha > 0)
    terms.push_back(elem(vertices.front().alpha, ExtNat::infinity()));
  if (vertices.back().beta > 0)
    terms.push_back(elem(ExtNat::infinity(), vertices.back().beta));
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const auto& p = vertices[i - 1];
    const auto& q = vertices[i];
    if (q.alpha <= p.alpha || q.beta >= p.beta)
      throw std::invalid_argument(
          "vertices must have increasing abscissae and decreasing ordinates");
    Edge e{q.alpha - p.alpha, p.beta - q.beta};
    if (i >= 2) {
      const auto& o = vertices[i - 2];
      Edge prev{p.alpha - o.alpha, o.beta - p.beta};
      if (prev.width * e.height >= e.width * prev.height)
        throw std::invalid_argument("vertex chain is not convex");
    }
    terms.push_back(elem(e.width, e.height));
  }
  return NewtonDiagram(std::move(terms));
}

std::vector<LatticePoint> NewtonDiagram::vertices() const {
  std::int64_t total_height = 0;
  for (const auto& e : canonical_.edges) total_height += e.height;
  std::vector<LatticePoint> out;
  LatticePoint p{canonical_.x_offset, canonical_.y_offset + total_height};
  out.push_back(p);
  for (const auto& e : canonical_.edges) {
    p.alpha += e.width;
    p.beta -= e.height;
    out.push_back(p);
  }
  return out;
}

std::vector<Face> NewtonDiagram::faces() const {
  std::vector<Face> out;
  auto chain = vertices();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Face f;
    f.from = chain[i];
    f.to = chain[i + 1];
    std::int64_t w = f.to.alpha - f.from.alpha;
    std::int64_t h = f.from.beta - f.to.beta;
    f.segments = std::gcd(w, h);
    f.u = w / f.segments;
    f.v = h / f.segments;
    out.push_back(f);
  }
  return out;
}

bool NewtonDiagram::is_convenient() const {
  return canonical_.x_offset == 0 && canonical_.y_offset == 0;
}

bool NewtonDiagram::is_nearly_convenient() const {
  return canonical_.x_offset <= 1 && canonical_.y_offset <= 1;
}

NewtonDiagram operator+(const NewtonDiagram& lhs, const NewtonDiagram& rhs) {
  std::vector<ElementaryDiagram> terms = lhs.terms_;
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return NewtonDiagram(std::move(terms));
}

ExtNat mixed_area(const ElementaryDiagram& lhs, const ElementaryDiagram& rhs) {
  return min(lhs.a * rhs.b, rhs.a * lhs.b);
}

namespace {

// Canonical form rewritten as a term list: offsets as {x\inf}, {inf\y},
// merged edges as {w\h}.
std::vector<ElementaryDiagram> canonical_terms(const CanonicalForm& form) {
  std::vector<ElementaryDiagram> out;
  if (form.x_offset > 0) out.push_back({form.x_offset, ExtNat::infinity()});
  if (form.y_offset > 0) out.push_back({ExtNat::infinity(), form.y_offset});
  for (const auto& e : form.edges) out.push_back({e.width, e.height});
  return out;
}

}  // namespace

ExtNat mixed_area(const NewtonDiagram& lhs, const NewtonDiagram& rhs) {
  ExtNat total(0);
  for (const auto& s : canonical_terms(lhs.canonical()))
    for (const auto& t : canonical_terms(rhs.canonical()))
      total = total + mixed_area(s, t);
  return total;
}

ExtNat newton_number(const ElementaryDiagram& term) {
  if (term.a.is_infinite())
    return term.b.value() == 1 ? ExtNat(0) : ExtNat::infinity();
  if (term.b.is_infinite())
    return term.a.value() == 1 ? ExtNat(0) : ExtNat::infinity();
  return ExtNat((term.a.value() - 1) * (term.b.value() - 1));
}

ExtNat newton_number(const NewtonDiagram& diagram) {
  const auto& form = diagram.canonical();
  if (!diagram.is_nearly_convenient()) return ExtNat::infinity();
  auto terms = canonical_terms(form);
  // sum nu(D_i) + 2 sum_{i<j} [D_i, D_j] - k + 1.
  std::int64_t total = 1 - static_cast<std::int64_t>(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += newton_number(terms[i]).value();
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      total += 2 * mixed_area(terms[i], terms[j]).value();
  }
  return ExtNat(total);
}

}  // namespace kouch
