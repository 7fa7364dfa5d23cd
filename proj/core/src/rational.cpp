#include "kouch/rational.hpp"

#include <limits>
#include <stdexcept>

#include "kouch/error.hpp"

namespace kouch {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::domain_error("integer out of range");
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("value is not an integer");
  return to_int64(q.get_num());
}

std::string to_string(const Rational& q) { return q.get_str(); }

const Rational& ExtRational::value() const {
  if (!value_) throw std::logic_error("value() of infinite ExtRational");
  return *value_;
}

std::string ExtRational::to_string() const {
  return value_ ? value_->get_str() : std::string("inf");
}

ExtRational ExtRational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed exact number '" + text + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return ExtRational(q);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRational min(const ExtRational& a, const ExtRational& b) {
  return a <= b ? a : b;
}

}  // namespace kouch
