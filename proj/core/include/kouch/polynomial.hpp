#pragma once

// Sparse bivariate polynomials over Q, plus the recursive view Q[x][y]
// used by resultants and gcds.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kouch/rational.hpp"
#include "kouch/univariate.hpp"

namespace kouch {

struct Monomial {
  int alpha = 0;  // exponent of x
  int beta = 0;   // exponent of y

  int degree() const { return alpha + beta; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(implicit)
  static Polynomial x();
  static Polynomial y();
  static Polynomial term(const Rational& coefficient, int alpha, int beta);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(int alpha, int beta) const;
  std::vector<Monomial> support() const;

  // Lowest total degree of a term (multiplicity at the origin); -1 for zero.
  int order() const;
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  Rational constant_term() const { return coefficient(0, 0); }

  Polynomial derivative_x() const;
  Polynomial derivative_y() const;
  // Drops every term of total degree >= bound.
  Polynomial truncated(int bound) const;
  // f(a x + b y, c x + d y).
  Polynomial linear_substitution(const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d) const;
  // f(0, y) and f(x, 0) as univariate polynomials.
  UPoly restrict_x_zero() const;
  UPoly restrict_y_zero() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) {
    return l += r;
  }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) {
    return l -= r;
  }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Human-readable form that parse() accepts, highest degree first:
  // "-x^3 + y^2", "3/2*x*y".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Coefficients in Q[x], indexed by the power of y; no trailing zeros.
class PolyY {
 public:
  PolyY() = default;
  explicit PolyY(std::vector<UPoly> coefficients);
  explicit PolyY(const Polynomial& p);

  bool is_zero() const { return coefficients_.empty(); }
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  const UPoly& leading() const;
  const UPoly& operator[](std::size_t k) const { return coefficients_.at(k); }
  const std::vector<UPoly>& coefficients() const { return coefficients_; }

  Polynomial to_polynomial() const;
  // Coefficients of P(0, y).
  UPoly at_x_zero() const;

  friend PolyY operator+(const PolyY& l, const PolyY& r);
  friend PolyY operator-(const PolyY& l, const PolyY& r);
  friend PolyY operator*(const PolyY& l, const PolyY& r);
  friend PolyY operator*(const PolyY& l, const UPoly& s);
  friend bool operator==(const PolyY&, const PolyY&) = default;

 private:
  void trim();
  std::vector<UPoly> coefficients_;
};

// lc(B)^(deg A - deg B + 1) * A mod B.
PolyY pseudo_remainder(const PolyY& a, const PolyY& b);
// Monic gcd in Q[x] of the coefficients.
UPoly content(const PolyY& p);
PolyY primitive_part(const PolyY& p);

// Res_y(A, B) in Q[x] by the subresultant remainder sequence.
UPoly resultant_y(const PolyY& a, const PolyY& b);
// num / den when den divides num (lex division with x > y); throws
// InvariantViolation otherwise.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

// gcd in Q[x, y] up to a rational factor (primitive remainder sequence).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace kouch
