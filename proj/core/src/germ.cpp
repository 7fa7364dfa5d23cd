#include "kouch/germ.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kouch/error.hpp"

namespace kouch {

std::int64_t Branch::multiplicity() const {
  std::int64_t m = 1;
  for (const auto& p : pairs) m *= p.a;
  return m;
}

Branch smooth_branch() { return Branch{}; }

Branch single_pair_branch(std::int64_t a, std::int64_t b) {
  return Branch{{CharPair{a, b}}, std::nullopt};
}

ExtRational branch_exponent(const Branch& branch) {
  if (branch.is_smooth()) return ExtRational::infinity();
  return ExtRational(make_rational(branch.pairs.front().b,
                                   branch.pairs.front().a));
}

GermData::GermData(std::vector<Branch> branches,
                   std::vector<std::vector<std::int64_t>> intersections)
    : branches_(std::move(branches)), intersections_(std::move(intersections)) {
  if (intersections_.size() != branches_.size())
    throw InputError("intersection matrix has " +
                     std::to_string(intersections_.size()) + " rows for " +
                     std::to_string(branches_.size()) + " branches");
  for (const auto& row : intersections_) {
    if (row.size() != branches_.size())
      throw InputError("intersection matrix is not square");
  }
}

std::int64_t GermData::intersection(std::size_t i, std::size_t j) const {
  return intersections_.at(i).at(j);
}

ExtRational GermData::contact(std::size_t i, std::size_t j) const {
  if (i == j) return ExtRational::infinity();
  return ExtRational(make_rational(
      intersection(i, j),
      branches_[i].multiplicity() * branches_[j].multiplicity()));
}

GermData GermData::subgerm(const std::vector<std::size_t>& indices) const {
  std::vector<Branch> bs;
  std::vector<std::vector<std::int64_t>> mat(
      indices.size(), std::vector<std::int64_t>(indices.size(), 0));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    bs.push_back(branches_.at(indices[i]));
    for (std::size_t j = 0; j < indices.size(); ++j)
      mat[i][j] = intersections_.at(indices[i]).at(indices[j]);
  }
  return GermData(std::move(bs), std::move(mat));
}

GermData GermData::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size())
    throw std::invalid_argument("permutation size mismatch");
  return subgerm(order);
}

namespace {

std::string branch_label(std::size_t i) {
  return "branch " + std::to_string(i + 1);
}

void validate_pairs(const GermData& germ, std::vector<Diagnostic>& out) {
  for (std::size_t i = 0; i < germ.size(); ++i) {
    const auto& pairs = germ.branch(i).pairs;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& p = pairs[k];
      if (p.a < 2 || p.b <= p.a) {
        out.push_back({branch_label(i) + ": characteristic pair (" +
                           std::to_string(p.a) + "," + std::to_string(p.b) +
                           ") needs a >= 2 and b > a",
                       {i}});
      } else if (std::gcd(p.a, p.b) != 1) {
        out.push_back({branch_label(i) + ": characteristic pair (" +
                           std::to_string(p.a) + "," + std::to_string(p.b) +
                           ") is not coprime",
                       {i}});
      }
      if (k > 0 && p.b <= p.a * pairs[k - 1].b) {
        out.push_back({branch_label(i) + ": pair " + std::to_string(k + 1) +
                           " violates b_k+1 > a_k+1 * b_k",
                       {i}});
      }
    }
    if (const auto& mu = germ.branch(i).milnor_override; mu && *mu < 0) {
      out.push_back({branch_label(i) + ": negative Milnor override", {i}});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const GermData& germ) {
  std::vector<Diagnostic> out;
  const std::size_t n = germ.size();
  if (n == 0) {
    out.push_back({"germ has no branches", {}});
    return out;
  }
  validate_pairs(germ, out);
  if (!out.empty()) return out;

  bool matrix_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t v = germ.intersection(i, j);
      if (v != germ.intersection(j, i)) {
        out.push_back({"intersection matrix not symmetric at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")",
                       {i, j}});
        matrix_ok = false;
        continue;
      }
      if (v <= 0) {
        out.push_back({"intersection (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") = " + std::to_string(v) +
                           " must be positive",
                       {i, j}});
        matrix_ok = false;
        continue;
      }
      std::int64_t bound =
          germ.branch(i).multiplicity() * germ.branch(j).multiplicity();
      if (v < bound) {
        out.push_back({"intersection (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") = " + std::to_string(v) +
                           " is below m_i*m_j = " + std::to_string(bound),
                       {i, j}});
        matrix_ok = false;
      }
    }
  }
  if (!matrix_ok) return out;

  // Ultrametric triangle inequality: the minimum of each triple is attained twice.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ExtRational dij = germ.contact(i, j);
        ExtRational dik = germ.contact(i, k);
        ExtRational djk = germ.contact(j, k);
        ExtRational lo = min(dij, min(dik, djk));
        int attained = (dij == lo) + (dik == lo) + (djk == lo);
        if (attained < 2) {
          out.push_back({"contacts of branches " + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + " (" + dij.to_string() +
                             ", " + dik.to_string() + ", " + djk.to_string() +
                             ") violate the triple condition",
                         {i, j, k}});
        }
      }
    }
  }
  return out;
}

bool is_valid(const GermData& germ) { return validate(germ).empty(); }

void require_valid(const GermData& germ) {
  auto diagnostics = validate(germ);
  if (diagnostics.empty()) return;
  std::ostringstream msg;
  msg << "invalid germ data:";
  for (const auto& d : diagnostics) msg << "\n  " << d.message;
  throw InputError(msg.str());
}

std::int64_t multiplicity(const GermData& germ) {
  std::int64_t m = 0;
  for (const auto& b : germ.branches()) m += b.multiplicity();
  return m;
}

ExtRational contact_order(const GermData& germ,
                          const std::vector<std::size_t>& lhs,
                          const std::vector<std::size_t>& rhs) {
  if (lhs.empty() || rhs.empty())
    throw std::invalid_argument("contact_order of an empty sub-germ");
  ExtRational best = ExtRational::infinity();
  for (std::size_t i : lhs)
    for (std::size_t j : rhs) best = min(best, germ.contact(i, j));
  return best;
}

ExtRational contact_exponent(const GermData& germ) {
  ExtRational best = ExtRational::infinity();
  for (std::size_t i = 0; i < germ.size(); ++i) {
    best = min(best, branch_exponent(germ.branch(i)));
    for (std::size_t j = i + 1; j < germ.size(); ++j)
      best = min(best, germ.contact(i, j));
  }
  return best;
}

bool milnor_computable(const GermData& germ) {
  return std::all_of(germ.branches().begin(), germ.branches().end(),
                     [](const Branch& b) {
                       return b.pairs.size() <= 1 || b.milnor_override;
                     });
}

std::int64_t milnor(const GermData& germ) {
  const std::size_t r = germ.size();
  std::int64_t total = 1 - static_cast<std::int64_t>(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Branch& b = germ.branch(i);
    if (b.milnor_override) {
      total += *b.milnor_override;
    } else if (b.pairs.size() == 1) {
      total += (b.pairs[0].a - 1) * (b.pairs[0].b - 1);
    } else if (b.pairs.size() > 1) {
      throw UnsupportedError(
          branch_label(i) +
          " has several characteristic pairs; supply a Milnor override");
    }
    for (std::size_t j = i + 1; j < r; ++j)
      total += 2 * germ.intersection(i, j);
  }
  return total;
}

TangentialDecomposition tangential_decomposition(const GermData& germ) {
  const std::size_t n = germ.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  const ExtRational one(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (germ.contact(i, j) > one) parent[find(j)] = find(i);

  TangentialDecomposition out;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.components.size());
      out.components.emplace_back();
    }
    out.components[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return out;
}

bool is_ordinary(const GermData& germ) {
  return static_cast<std::int64_t>(tangential_decomposition(germ).count()) ==
         multiplicity(germ);
}

}  // namespace kouch
