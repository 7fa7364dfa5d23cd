#include "kouch/univariate.hpp"

#include <sstream>
#include <stdexcept>

#include "kouch/error.hpp"

namespace kouch {

UPoly::UPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

UPoly::UPoly(const Rational& constant) {
  if (constant != 0) coefficients_.push_back(constant);
}

UPoly UPoly::monomial(const Rational& coefficient, std::size_t degree) {
  UPoly p;
  if (coefficient == 0) return p;
  p.coefficients_.assign(degree + 1, Rational(0));
  p.coefficients_[degree] = coefficient;
  return p;
}

void UPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

const Rational& UPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return coefficients_.back();
}

Rational UPoly::operator[](std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

long UPoly::order() const {
  for (std::size_t k = 0; k < coefficients_.size(); ++k)
    if (coefficients_[k] != 0) return static_cast<long>(k);
  return -1;
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    out.push_back(coefficients_[k] * static_cast<long>(k));
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly p = *this;
  Rational inv = 1 / leading();
  return p *= inv;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size())
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k)
    coefficients_[k] += rhs.coefficients_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size())
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k)
    coefficients_[k] -= rhs.coefficients_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& lhs, const UPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coefficients_.size() +
                                rhs.coefficients_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    if (lhs.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
      out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
  }
  return UPoly(std::move(out));
}

std::string UPoly::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) out << mag.get_str() << (k > 0 ? "*" : "");
    if (k > 0) out << variable;
    if (k > 1) out << '^' << k;
    first = false;
  }
  return out.str();
}

UDivision divide(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  UDivision out;
  UPoly rem = num;
  std::vector<Rational> quot;
  if (num.degree() >= den.degree())
    quot.assign(static_cast<std::size_t>(num.degree() - den.degree() + 1),
                Rational(0));
  const Rational inv = 1 / den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - den.degree());
    Rational factor = rem.leading() * inv;
    quot[shift] = factor;
    rem -= UPoly::monomial(factor, shift) * den;
  }
  out.quotient = UPoly(std::move(quot));
  out.remainder = std::move(rem);
  return out;
}

UPoly exact_divide(const UPoly& num, const UPoly& den) {
  auto qr = divide(num, den);
  if (!qr.remainder.is_zero())
    throw InvariantViolation("inexact polynomial division");
  return qr.quotient;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(UPoly base, std::size_t exponent) {
  UPoly acc(Rational(1));
  while (exponent > 0) {
    if (exponent & 1U) acc = acc * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return acc;
}

}  // namespace kouch
