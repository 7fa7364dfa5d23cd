#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace kouch {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds the reduced fraction num/den.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integral(const Rational& q);

// Exact value for integral q; throws std::domain_error otherwise or when the
// value does not fit in 64 bits.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

// "3/2", "-4", "0".
std::string to_string(const Rational& q);

// A positive rational or +infinity. Contact orders, contact exponents and
// decomposition exponents all live here.
class ExtRational {
 public:
  ExtRational() = default;  // infinity
  ExtRational(const Rational& value) : value_(value) {}  // NOLINT(implicit)
  ExtRational(std::int64_t value) : value_(Rational(value)) {}  // NOLINT

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Integral finite value.
  bool is_integer() const { return value_ && is_integral(*value_); }
  const Rational& value() const;

  // "inf" for infinity, otherwise the reduced fraction.
  std::string to_string() const;
  // Inverse of to_string(); throws InputError.
  static ExtRational parse(const std::string& text);

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

 private:
  std::optional<Rational> value_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);

}  // namespace kouch
