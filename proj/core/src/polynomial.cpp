#include "kouch/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kouch/error.hpp"

namespace kouch {

Polynomial::Polynomial(const Rational& constant) { add_term({0, 0}, constant); }

Polynomial Polynomial::x() { return term(1, 1, 0); }
Polynomial Polynomial::y() { return term(1, 0, 1); }

Polynomial Polynomial::term(const Rational& coefficient, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("negative exponent");
  Polynomial p;
  p.add_term({alpha, beta}, coefficient);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(int alpha, int beta) const {
  auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

int Polynomial::order() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    if (best < 0 || m.degree() < best) best = m.degree();
  return best;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

int Polynomial::degree_x() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.alpha);
  return best;
}

int Polynomial::degree_y() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.beta);
  return best;
}

Polynomial Polynomial::derivative_x() const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.alpha > 0) out.add_term({m.alpha - 1, m.beta}, c * m.alpha);
  return out;
}

Polynomial Polynomial::derivative_y() const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.beta > 0) out.add_term({m.alpha, m.beta - 1}, c * m.beta);
  return out;
}

Polynomial Polynomial::truncated(int bound) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() < bound) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::linear_substitution(const Rational& a, const Rational& b,
                                           const Rational& c,
                                           const Rational& d) const {
  const Polynomial u = term(a, 1, 0) + term(b, 0, 1);
  const Polynomial v = term(c, 1, 0) + term(d, 0, 1);
  std::vector<Polynomial> u_pow{Polynomial(1)};
  std::vector<Polynomial> v_pow{Polynomial(1)};
  for (int k = 1; k <= degree_x(); ++k) u_pow.push_back(u_pow.back() * u);
  for (int k = 1; k <= degree_y(); ++k) v_pow.push_back(v_pow.back() * v);
  Polynomial out;
  for (const auto& [m, coeff] : terms_) {
    Polynomial t = u_pow[static_cast<std::size_t>(m.alpha)] *
                   v_pow[static_cast<std::size_t>(m.beta)];
    t *= coeff;
    out += t;
  }
  return out;
}

UPoly Polynomial::restrict_x_zero() const {
  std::vector<Rational> out;
  for (const auto& [m, c] : terms_) {
    if (m.alpha != 0) continue;
    if (out.size() <= static_cast<std::size_t>(m.beta))
      out.resize(static_cast<std::size_t>(m.beta) + 1, Rational(0));
    out[static_cast<std::size_t>(m.beta)] = c;
  }
  return UPoly(std::move(out));
}

UPoly Polynomial::restrict_y_zero() const {
  std::vector<Rational> out;
  for (const auto& [m, c] : terms_) {
    if (m.beta != 0) continue;
    if (out.size() <= static_cast<std::size_t>(m.alpha))
      out.resize(static_cast<std::size_t>(m.alpha) + 1, Rational(0));
    out[static_cast<std::size_t>(m.alpha)] = c;
  }
  return UPoly(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  Polynomial out;
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_)
      out.add_term({ml.alpha + mr.alpha, ml.beta + mr.beta}, cl * cr);
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial acc(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) acc = acc * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(),
                                                     terms_.end());
  // Descending total degree, then descending power of y.
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree())
      return l.first.degree() > r.first.degree();
    return l.first.beta > r.first.beta;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (mag == 1) && m.degree() > 0;
    if (!unit) out << mag.get_str();
    bool need_star = !unit;
    auto emit = [&](char var, int e) {
      if (e == 0) return;
      if (need_star) out << '*';
      out << var;
      if (e > 1) out << '^' << e;
      need_star = true;
    };
    emit('x', m.alpha);
    emit('y', m.beta);
    first = false;
  }
  return out.str();
}

PolyY::PolyY(std::vector<UPoly> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

PolyY::PolyY(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (coefficients_.size() <= static_cast<std::size_t>(m.beta))
      coefficients_.resize(static_cast<std::size_t>(m.beta) + 1);
    coefficients_[static_cast<std::size_t>(m.beta)] +=
        UPoly::monomial(c, static_cast<std::size_t>(m.alpha));
  }
  trim();
}

void PolyY::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero())
    coefficients_.pop_back();
}

const UPoly& PolyY::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return coefficients_.back();
}

Polynomial PolyY::to_polynomial() const {
  Polynomial out;
  for (std::size_t b = 0; b < coefficients_.size(); ++b) {
    const auto& cs = coefficients_[b].coefficients();
    for (std::size_t a = 0; a < cs.size(); ++a)
      if (cs[a] != 0)
        out += Polynomial::term(cs[a], static_cast<int>(a),
                                static_cast<int>(b));
  }
  return out;
}

UPoly PolyY::at_x_zero() const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c[0]);
  return UPoly(std::move(out));
}

PolyY operator+(const PolyY& l, const PolyY& r) {
  std::vector<UPoly> out(std::max(l.coefficients_.size(),
                                  r.coefficients_.size()));
  for (std::size_t k = 0; k < l.coefficients_.size(); ++k)
    out[k] += l.coefficients_[k];
  for (std::size_t k = 0; k < r.coefficients_.size(); ++k)
    out[k] += r.coefficients_[k];
  return PolyY(std::move(out));
}

PolyY operator-(const PolyY& l, const PolyY& r) {
  std::vector<UPoly> out(std::max(l.coefficients_.size(),
                                  r.coefficients_.size()));
  for (std::size_t k = 0; k < l.coefficients_.size(); ++k)
    out[k] += l.coefficients_[k];
  for (std::size_t k = 0; k < r.coefficients_.size(); ++k)
    out[k] -= r.coefficients_[k];
  return PolyY(std::move(out));
}

PolyY operator*(const PolyY& l, const PolyY& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<UPoly> out(l.coefficients_.size() + r.coefficients_.size() - 1);
  for (std::size_t i = 0; i < l.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < r.coefficients_.size(); ++j)
      out[i + j] += l.coefficients_[i] * r.coefficients_[j];
  return PolyY(std::move(out));
}

PolyY operator*(const PolyY& l, const UPoly& s) {
  std::vector<UPoly> out;
  out.reserve(l.coefficients_.size());
  for (const auto& c : l.coefficients_) out.push_back(c * s);
  return PolyY(std::move(out));
}

namespace {

PolyY shifted(const PolyY& p, std::size_t k) {
  std::vector<UPoly> out(k);
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return PolyY(std::move(out));
}

PolyY exact_divide(const PolyY& p, const UPoly& d) {
  std::vector<UPoly> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(exact_divide(c, d));
  return PolyY(std::move(out));
}

}  // namespace

PolyY pseudo_remainder(const PolyY& a, const PolyY& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  long remaining = a.degree() - b.degree() + 1;
  const UPoly& lb = b.leading();
  PolyY r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    PolyY t = shifted(b, static_cast<std::size_t>(r.degree() - b.degree())) *
              r.leading();
    r = r * lb - t;
    --remaining;
  }
  if (remaining > 0) r = r * pow(lb, static_cast<std::size_t>(remaining));
  return r;
}

UPoly content(const PolyY& p) {
  UPoly g;
  for (const auto& c : p.coefficients()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

PolyY primitive_part(const PolyY& p) {
  if (p.is_zero()) return p;
  return exact_divide(p, content(p));
}

UPoly resultant_y(const PolyY& a_in, const PolyY& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return {};
  if (b_in.degree() == 0)
    return pow(b_in.leading(), static_cast<std::size_t>(a_in.degree()));
  if (a_in.degree() == 0)
    return pow(a_in.leading(), static_cast<std::size_t>(b_in.degree()));

  PolyY a = a_in;
  PolyY b = b_in;
  Rational sign(1);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
  }
  const UPoly ca = content(a);
  const UPoly cb = content(b);
  a = exact_divide(a, ca);
  b = exact_divide(b, cb);
  const UPoly t = pow(ca, static_cast<std::size_t>(b.degree())) *
                  pow(cb, static_cast<std::size_t>(a.degree()));

  UPoly g(Rational(1));
  UPoly h(Rational(1));
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    PolyY r = pseudo_remainder(a, b);
    a = std::move(b);
    b = exact_divide(r, g * pow(h, static_cast<std::size_t>(delta)));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(pow(g, static_cast<std::size_t>(delta)),
                       pow(h, static_cast<std::size_t>(delta - 1)));
    }
    if (b.is_zero()) return {};
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<std::size_t>(a.degree());
  h = exact_divide(pow(b.leading(), da), pow(h, da - 1));
  return t * h * sign;
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead, lead_c] = *den.terms().rbegin();
  Polynomial quotient;
  Polynomial rest = num;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    if (m.alpha < lead.alpha || m.beta < lead.beta)
      throw InvariantViolation("inexact bivariate division");
    Polynomial t =
        Polynomial::term(c / lead_c, m.alpha - lead.alpha, m.beta - lead.beta);
    quotient += t;
    rest -= t * den;
  }
  return quotient;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero()) return b_in;
  if (b_in.is_zero()) return a_in;
  PolyY a(a_in);
  PolyY b(b_in);
  const UPoly c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  // Coprime in Q(x)[y] exactly when the resultant is nonzero; the
  // subresultant sequence is far cheaper than the primitive one.
  if (a.degree() > 0 && b.degree() > 0 && !resultant_y(a, b).is_zero())
    return PolyY(std::vector<UPoly>{c}).to_polynomial();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    PolyY r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  PolyY g = b.is_zero() ? a : PolyY(std::vector<UPoly>{UPoly(Rational(1))});
  return (g * c).to_polynomial();
}

}  // namespace kouch
