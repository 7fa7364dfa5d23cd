#pragma once

// Newton diagrams in the positive quadrant, viewed as the semigroup generated
// by Teissier's elementary diagrams {a\b} under Minkowski sum.
//
// A NewtonDiagram stores the formal multiset of elementary terms it was built
// from, together with its canonical staircase form (axis offsets plus the
// compact edges sorted by increasing width/height). Mixed area and Newton
// number are evaluated on the canonical form; the tests check that the
// term-wise bilinear expansion gives the same values.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kouch {

// Nonnegative integer or +infinity, with 0 * inf = 0.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t value) : value_(value) {}  // NOLINT

  static constexpr ExtNat infinity() {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Throws std::logic_error when infinite.
  std::int64_t value() const;
  std::string to_string() const;

  friend ExtNat operator+(ExtNat a, ExtNat b);
  friend ExtNat operator*(ExtNat a, ExtNat b);
  friend bool operator==(ExtNat a, ExtNat b) = default;
  friend std::strong_ordering operator<=>(ExtNat a, ExtNat b);

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

ExtNat min(ExtNat a, ExtNat b);

// {a\b}: hull of (a,0),(0,b) plus the quadrant; {a\inf} = (a,0)+R^2_+,
// {inf\b} = (0,b)+R^2_+.
struct ElementaryDiagram {
  ExtNat a;
  ExtNat b;

  friend bool operator==(const ElementaryDiagram&,
                         const ElementaryDiagram&) = default;
};

// Throws std::invalid_argument unless both extents are >= 1 and not both
// infinite.
ElementaryDiagram elem(ExtNat a, ExtNat b);

struct LatticePoint {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Edge {
  std::int64_t width = 0;
  std::int64_t height = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CanonicalForm {
  std::int64_t x_offset = 0;
  std::int64_t y_offset = 0;
  std::vector<Edge> edges;  // strictly increasing width/height

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// A compact face, walked from its upper-left endpoint `from` to `to`.
struct Face {
  LatticePoint from;
  LatticePoint to;
  std::int64_t u = 0;  // primitive step is (u, -v)
  std::int64_t v = 0;
  std::int64_t segments = 0;  // r = gcd(width, height); r+1 lattice points

  std::int64_t lattice_count() const { return segments + 1; }
  LatticePoint point(std::int64_t k) const {
    return {from.alpha + k * u, from.beta - k * v};
  }
};

class NewtonDiagram {
 public:
  // The zero of the semigroup: the whole quadrant R^2_+.
  NewtonDiagram() = default;
  explicit NewtonDiagram(const ElementaryDiagram& term);
  explicit NewtonDiagram(std::vector<ElementaryDiagram> terms);

  // Vertices must have strictly increasing abscissae, strictly decreasing
  // ordinates and strictly increasing edge inclination. Throws
  // std::invalid_argument otherwise.
  static NewtonDiagram from_vertices(std::span<const LatticePoint> vertices);

  const std::vector<ElementaryDiagram>& terms() const { return terms_; }
  const CanonicalForm& canonical() const { return canonical_; }

  // Vertex chain from the upper-left vertex to the lower-right one.
  std::vector<LatticePoint> vertices() const;
  std::vector<Face> faces() const;

  bool is_convenient() const;
  bool is_nearly_convenient() const;

  // Same planar region.
  bool same_region(const NewtonDiagram& other) const {
    return canonical_ == other.canonical_;
  }

  friend NewtonDiagram operator+(const NewtonDiagram& lhs,
                                 const NewtonDiagram& rhs);

 private:
  std::vector<ElementaryDiagram> terms_;
  CanonicalForm canonical_;
};

CanonicalForm canonicalize(std::span<const ElementaryDiagram> terms);

// [D, D'] from (m1)-(m3): inf{ab', a'b} on generators, extended bilinearly.
ExtNat mixed_area(const ElementaryDiagram& lhs, const ElementaryDiagram& rhs);
ExtNat mixed_area(const NewtonDiagram& lhs, const NewtonDiagram& rhs);

// (a-1)(b-1) on {a\b}; 0 on {1\inf}, {inf\1}; infinite on other quadrants.
ExtNat newton_number(const ElementaryDiagram& term);
// Infinite exactly when the diagram is not nearly convenient. The zero
// diagram has Newton number 1, as forced by the sum formula with no terms.
ExtNat newton_number(const NewtonDiagram& diagram);

}  // namespace kouch
