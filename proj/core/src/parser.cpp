#include "kouch/parser.hpp"

#include <cctype>
#include <string>

#include "kouch/error.hpp"

namespace kouch {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip_space();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    std::size_t exponent_at = pos_;
    Polynomial e = unary();
    if (e.total_degree() > 0)
      throw ParseError("exponent must be a constant", exponent_at);
    Rational value = e.constant_term();
    if (!is_integral(value))
      throw ParseError("exponent must be a nonnegative integer", exponent_at);
    if (value < 0) throw ParseError("negative exponent", exponent_at);
    if (value > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), at);
    return pow(base, static_cast<unsigned>(value.get_num().get_ui()));
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected denominator", pos_);
        std::size_t den_at = pos_;
        Integer den = integer();
        if (den == 0) throw ParseError("zero denominator", den_at);
        Rational q(num, den);
        q.canonicalize();
        return Polynomial(q);
      }
      pos_ = save;
      return Polynomial(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word.find_first_not_of("xy") != std::string_view::npos) {
        throw ParseError("unknown identifier '" + std::string(word) + "'",
                         start);
      }
      // A run such as "xy" is the product of its letters.
      pos_ = start + 1;
      return word[0] == 'x' ? Polynomial::x() : Polynomial::y();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).run(); }

}  // namespace kouch
