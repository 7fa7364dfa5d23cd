#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kouch/rational.hpp"

namespace kouch {

// Dense univariate polynomial over Q; coefficient of t^k at index k, no
// trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(const Rational& constant);  // NOLINT(implicit)
  static UPoly monomial(const Rational& coefficient, std::size_t degree);

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  const Rational& leading() const;
  // Zero above the degree.
  Rational operator[](std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // Index of the lowest nonzero coefficient; -1 for zero.
  long order() const;
  Rational evaluate(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  friend UPoly operator-(UPoly p) { return p *= Rational(-1); }
  friend UPoly operator*(const UPoly& lhs, const UPoly& rhs);
  friend UPoly operator*(UPoly p, const Rational& s) { return p *= s; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(char variable = 't') const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

// Throws std::domain_error on division by zero.
UDivision divide(const UPoly& num, const UPoly& den);
// Throws InvariantViolation if the division is not exact.
UPoly exact_divide(const UPoly& num, const UPoly& den);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(UPoly base, std::size_t exponent);

}  // namespace kouch
