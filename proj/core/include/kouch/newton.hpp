#pragma once

// Newton diagram of a polynomial germ and the face-by-face nondegeneracy
// test.

#include <vector>

#include "kouch/diagram.hpp"
#include "kouch/polynomial.hpp"
#include "kouch/univariate.hpp"

namespace kouch {

// Coefficients of f along a compact face, read from the upper-left endpoint:
// u(t) = sum_k c_k t^k with c_k the coefficient at face.point(k).
struct FacePolynomial {
  Face face;
  UPoly u;
};

// Throws InputError for the zero polynomial or when f(0,0) != 0.
void require_germ(const Polynomial& f);

// Lower-left staircase hull of the support.
NewtonDiagram diagram_of(const Polynomial& f);

std::vector<FacePolynomial> faces(const Polynomial& f);

// True iff u has no multiple root in C*: gcd(u, u') stripped of powers of t
// is constant.
bool face_nondegenerate(const FacePolynomial& face);

// gcd(f, f_x, f_y) does not vanish at the origin.
bool is_reduced_at_origin(const Polynomial& f);

// Every face passes face_nondegenerate. Throws InputError when f is not
// reduced at the origin.
bool chart_nondegenerate(const Polynomial& f);

}  // namespace kouch
