#include "kouch/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "kouch/error.hpp"
#include "kouch/milnor.hpp"
#include "kouch/newton.hpp"

namespace kouch {
namespace {

Rational draw_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational c = make_rational(num(rng), den(rng));
  return sign(rng) ? Rational(-c) : c;
}

std::vector<Rational> group_coefficients(std::size_t count, std::uint64_t seed,
                                         std::mt19937_64& rng) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (seed == 0) {
      out.emplace_back(static_cast<long>(k + 1));
      continue;
    }
    Rational c;
    do {
      c = draw_coefficient(rng);
    } while (std::find(out.begin(), out.end(), c) != out.end());
    out.push_back(c);
  }
  return out;
}

Polynomial product(const std::vector<Polynomial>& factors) {
  Polynomial f(Rational(1));
  for (const Polynomial& p : factors) f = f * p;
  return f;
}

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// First pair whose resultant-order intersection differs from the germ.
std::optional<std::string> intersection_mismatch(
    const GermData& germ, const std::vector<Polynomial>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      std::int64_t got = local_intersection(factors[i], factors[j]).value;
      if (got != germ.intersection(i, j))
        return "intersection " + pair_label(i, j) + " is " +
               std::to_string(got) + ", expected " +
               std::to_string(germ.intersection(i, j));
    }
  return std::nullopt;
}

}  // namespace

ModelCheck verify_model(const GermData& germ, const Decomposition& witness,
                        const ModelEquation& model) {
  ModelCheck out;
  const Polynomial& f = model.polynomial;
  auto fail = [&](const std::string& why) {
    if (out.detail.empty()) out.detail = why;
  };

  out.diagram_matches =
      diagram_of(f).same_region(model_diagram(germ, witness));
  if (!out.diagram_matches) fail("diagram differs from the model diagram");

  try {
    out.chart_nondegenerate = chart_nondegenerate(f);
    if (!out.chart_nondegenerate) fail("a face polynomial is degenerate");
  } catch (const InputError& e) {
    fail(e.what());
  }

  out.transversal = f.restrict_x_zero().order() == f.order();
  if (!out.transversal) fail("x = 0 is tangent to the model");

  if (model.factors.size() != germ.size()) {
    fail("factor count differs from the branch count");
  } else if (auto bad = intersection_mismatch(germ, model.factors)) {
    fail(*bad);
  } else {
    out.intersections_match = true;
  }
  return out;
}

ModelEquation model_equation(const GermData& germ, const Decomposition& witness,
                             std::uint64_t seed) {
  if (auto bad = check_witness(germ, witness))
    throw InputError("not a witness: " + *bad);

  std::mt19937_64 rng(seed);
  ModelEquation out;
  out.factors.resize(germ.size());
  for (const Group& group : witness.groups) {
    const ExtRational& e = group.exponent;
    if (e.is_infinite()) {
      for (std::size_t i : group.branches) out.factors[i] = Polynomial::y();
      continue;
    }
    std::vector<Rational> c = group_coefficients(group.branches.size(), seed, rng);
    int a = static_cast<int>(to_int64(Integer(e.value().get_den())));
    int b = static_cast<int>(to_int64(Integer(e.value().get_num())));
    for (std::size_t k = 0; k < group.branches.size(); ++k)
      out.factors[group.branches[k]] =
          Polynomial::term(Rational(1), 0, a) - Polynomial::term(c[k], b, 0);
  }
  out.polynomial = product(out.factors);

  ModelCheck check = verify_model(germ, witness, out);
  if (!check.ok())
    throw InvariantViolation("model equation failed verification: " +
                             check.detail);
  return out;
}

namespace {

using Matrix = std::vector<std::vector<UPoly>>;

Matrix multiply(const Matrix& l, const Matrix& r) {
  std::size_t n = l.size();
  Matrix out(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (l[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!r[k][j].is_zero()) out[i][j] += l[i][k] * r[k][j];
    }
  return out;
}

}  // namespace

Polynomial implicit_equation(const PuiseuxSeries& series) {
  if (series.ramification < 1)
    throw InputError("ramification must be positive");
  const std::size_t n = static_cast<std::size_t>(series.ramification);

  // Multiplication by s(t) on Q[x][t]/(t^n - x), basis 1, t, ..., t^(n-1).
  Matrix m(n, std::vector<UPoly>(n));
  for (const SeriesTerm& term : series.terms) {
    Rational scaled = term.exponent * Rational(series.ramification);
    if (!is_integral(scaled) || scaled < 0)
      throw InputError("series exponent " + to_string(term.exponent) +
                       " does not fit ramification " +
                       std::to_string(series.ramification));
    std::size_t k = static_cast<std::size_t>(to_int64(scaled));
    for (std::size_t j = 0; j < n; ++j)
      m[(k + j) % n][j] += UPoly::monomial(term.coefficient, (k + j) / n);
  }

  // Faddeev-LeVerrier: det(yI - M) = sum c_i y^i.
  std::vector<UPoly> c(n + 1);
  c[n] = UPoly(Rational(1));
  Matrix mk(n, std::vector<UPoly>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = multiply(m, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    Matrix am = multiply(m, mk);
    UPoly trace;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = trace * make_rational(-1, static_cast<std::int64_t>(k));
  }

  Polynomial f;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k < c[i].coefficients().size(); ++k)
      if (c[i][k] != 0)
        f += Polynomial::term(c[i][k], static_cast<int>(k),
                              static_cast<int>(i));
  return f;
}

namespace {

// Exponent at which the series of branches i and j first differ, derived
// from their contact order; nullopt when no pair of Puiseux series can
// produce it.
std::optional<Rational> agreement_exponent(const GermData& germ, std::size_t i,
                                           std::size_t j) {
  Rational d = germ.contact(i, j).value();
  const Branch& bi = germ.branch(i);
  const Branch& bj = germ.branch(j);
  ExtRational ei = branch_exponent(bi);
  ExtRational ej = branch_exponent(bj);
  ExtRational low = min(ei, ej);

  if (low.is_infinite() || d < low.value()) {
    if (!is_integral(d)) return std::nullopt;
    return d;
  }
  if (d == low.value()) return d;
  if (ei != ej) return std::nullopt;
  // Same pair (a, b), contact above the characteristic exponent: one
  // conjugate agrees up to kappa, the other a - 1 stop at e.
  Rational e = ei.value();
  Rational a(static_cast<long>(bi.pairs.front().a));
  Rational kappa = a * d - (a - 1) * e;
  if (!is_integral(kappa * a)) return std::nullopt;
  return kappa;
}

enum class Slot { free, zero, nonzero };

class SeriesBuilder {
 public:
  SeriesBuilder(const GermData& germ, std::uint64_t seed)
      : germ_(germ), rng_(seed), terms_(germ.size()),
        char_done_(germ.size(), false),
        kappa_(germ.size(), std::vector<Rational>(germ.size())) {
    for (std::size_t i = 0; i < germ.size(); ++i) {
      if (germ.branch(i).pairs.size() > 1)
        throw UnsupportedError("branch " + std::to_string(i + 1) +
                               " has more than one characteristic pair");
      for (std::size_t j = i + 1; j < germ.size(); ++j) {
        auto k = agreement_exponent(germ, i, j);
        if (!k)
          throw UnsupportedError("contact " + pair_label(i, j) +
                                 " is not realized by Puiseux series");
        kappa_[i][j] = kappa_[j][i] = *k;
      }
    }
  }

  std::vector<PuiseuxSeries> build() {
    std::vector<std::size_t> all(germ_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    split(all, Rational(0));
    std::vector<PuiseuxSeries> out;
    for (std::size_t i = 0; i < germ_.size(); ++i) {
      PuiseuxSeries s;
      s.ramification = germ_.branch(i).multiplicity();
      for (const auto& [e, c] : terms_[i]) s.terms.push_back({e, c});
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  std::optional<Rational> char_exponent(std::size_t i) const {
    ExtRational e = branch_exponent(germ_.branch(i));
    if (e.is_infinite()) return std::nullopt;
    return e.value();
  }

  Slot slot(std::size_t i, const Rational& q) const {
    auto e = char_exponent(i);
    if (!e) return is_integral(q) ? Slot::free : Slot::zero;
    if (q == *e) return Slot::nonzero;
    std::int64_t a = germ_.branch(i).pairs.front().a;
    if (q < *e) return is_integral(q) ? Slot::free : Slot::zero;
    return is_integral(q * Rational(static_cast<long>(a))) ? Slot::free
                                                          : Slot::zero;
  }

  Rational fresh_positive(std::vector<Rational>& used) {
    std::uniform_int_distribution<long> pick(1, 9 + static_cast<long>(used.size()));
    Rational c;
    do {
      c = Rational(pick(rng_));
    } while (std::find(used.begin(), used.end(), c) != used.end());
    used.push_back(c);
    return c;
  }

  void split(const std::vector<std::size_t>& set, const Rational& after) {
    std::optional<Rational> q;
    for (std::size_t x = 0; x < set.size(); ++x)
      for (std::size_t y = x + 1; y < set.size(); ++y) {
        const Rational& k = kappa_[set[x]][set[y]];
        if (!q || k < *q) q = k;
      }

    // Characteristic terms below the next split are shared by the whole set.
    std::optional<Rational> shared;
    for (std::size_t i : set) {
      auto e = char_exponent(i);
      if (e && !char_done_[i] && *e > after && (!q || *e < *q)) {
        if (shared && *shared != *e)
          throw UnsupportedError("branches sharing all terms below " +
                                 to_string(*e) +
                                 " have different characteristic exponents");
        shared = e;
      }
    }
    if (shared) {
      std::vector<Rational> used;
      Rational c = fresh_positive(used);
      for (std::size_t i : set) {
        if (char_exponent(i) != shared)
          throw UnsupportedError("a smooth branch cannot follow a "
                                 "characteristic term at " +
                                 to_string(*shared));
        terms_[i][*shared] = c;
        char_done_[i] = true;
      }
    }
    if (!q) return;

    // Classes: closure of kappa > q; they must be cliques.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i : set) {
      bool placed = false;
      for (auto& cls : classes)
        if (kappa_[cls.front()][i] > *q) {
          cls.push_back(i);
          placed = true;
          break;
        }
      if (!placed) classes.push_back({i});
    }
    for (std::size_t u = 0; u < classes.size(); ++u)
      for (std::size_t v = 0; v < classes.size(); ++v)
        for (std::size_t x : classes[u])
          for (std::size_t y : classes[v])
            if (x != y && (kappa_[x][y] > *q) != (u == v))
              throw UnsupportedError("contacts " + pair_label(x, y) +
                                     " violate the ultrametric tree at " +
                                     to_string(*q));

    std::vector<Slot> slots;
    std::size_t zero_classes = 0;
    for (const auto& cls : classes) {
      Slot s = Slot::free;
      for (std::size_t i : cls) {
        Slot t = slot(i, *q);
        if (t == Slot::free) continue;
        if (s != Slot::free && s != t)
          throw UnsupportedError("conflicting terms at exponent " +
                                 to_string(*q));
        s = t;
      }
      if (s == Slot::zero) ++zero_classes;
      slots.push_back(s);
    }
    if (zero_classes > 1)
      throw UnsupportedError("two classes must both vanish at exponent " +
                             to_string(*q));

    std::vector<Rational> used;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (slots[k] == Slot::zero) continue;
      Rational c = fresh_positive(used);
      for (std::size_t i : classes[k]) {
        terms_[i][*q] = c;
        if (slots[k] == Slot::nonzero) char_done_[i] = true;
      }
    }
    for (const auto& cls : classes) split(cls, *q);
  }

  const GermData& germ_;
  std::mt19937_64 rng_;
  std::vector<std::map<Rational, Rational>> terms_;
  std::vector<bool> char_done_;
  std::vector<std::vector<Rational>> kappa_;
};

}  // namespace

std::vector<PuiseuxSeries> realize_series(const GermData& germ,
                                          std::uint64_t seed) {
  require_valid(germ);
  return SeriesBuilder(germ, seed).build();
}

ModelEquation realize_germ(const GermData& germ, std::uint64_t seed) {
  ModelEquation out;
  for (const PuiseuxSeries& s : realize_series(germ, seed))
    out.factors.push_back(implicit_equation(s));
  out.polynomial = product(out.factors);
  if (auto bad = intersection_mismatch(germ, out.factors))
    throw UnsupportedError("realization does not match the germ: " + *bad);
  return out;
}

}  // namespace kouch
