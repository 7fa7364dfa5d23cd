#include "kouch/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "kouch/error.hpp"

namespace kouch {
namespace {

std::string label(std::size_t i) { return std::to_string(i + 1); }

std::string multi_pair_refutation(const GermData& germ) {
  for (std::size_t i = 0; i < germ.size(); ++i) {
    std::size_t k = germ.branch(i).pairs.size();
    if (k >= 2) {
      return "branch " + label(i) + " has " + std::to_string(k) +
             " characteristic pairs; every branch of an N-germ is smooth or "
             "has exactly one";
    }
  }
  return {};
}

// Checks the group-local conditions (type of branches, infinity singleton).
std::optional<std::string> check_group_type(const GermData& germ,
                                            const Group& group) {
  const ExtRational& e = group.exponent;
  if (e.is_infinite()) {
    if (group.branches.size() != 1)
      return "group with exponent inf must be a single branch";
  } else if (e.value() < 1) {
    return "exponent " + e.to_string() + " is below 1";
  }
  for (std::size_t i : group.branches) {
    const Branch& b = germ.branch(i);
    if (e.is_infinite() || e.is_integer()) {
      if (!b.is_smooth())
        return "branch " + label(i) + " is singular but its group exponent " +
               e.to_string() + " is integral";
    } else if (b.pairs.size() != 1) {
      return "branch " + label(i) + " must have exactly one characteristic "
             "pair for group exponent " + e.to_string();
    } else if (branch_exponent(b) != e) {
      return "branch " + label(i) + " has exponent " +
             branch_exponent(b).to_string() + " but its group exponent is " +
             e.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_pair(const GermData& germ, std::size_t i,
                                      std::size_t j, const ExtRational& ei,
                                      const ExtRational& ej) {
  ExtRational expected = min(ei, ej);
  ExtRational actual = germ.contact(i, j);
  if (actual != expected) {
    return "branches " + label(i) + " and " + label(j) + " have contact " +
           actual.to_string() + " but the decomposition requires " +
           expected.to_string();
  }
  return std::nullopt;
}

// Groups branches by equal exponent, ordered by exponent.
Decomposition decomposition_from(const std::vector<ExtRational>& exponent) {
  std::map<ExtRational, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < exponent.size(); ++i)
    by_value[exponent[i]].push_back(i);
  Decomposition d;
  for (auto& [e, members] : by_value) d.groups.push_back({members, e});
  return d;
}

}  // namespace

std::optional<std::string> check_witness(const GermData& germ,
                                         const Decomposition& witness,
                                         ExponentSemantics semantics) {
  const std::size_t n = germ.size();
  if (witness.groups.empty()) return "decomposition has no groups";
  std::vector<int> group_of(n, -1);
  for (std::size_t g = 0; g < witness.groups.size(); ++g) {
    const Group& group = witness.groups[g];
    if (group.branches.empty()) return "decomposition has an empty group";
    for (std::size_t i : group.branches) {
      if (i >= n) return "branch index " + label(i) + " out of range";
      if (group_of[i] >= 0)
        return "branch " + label(i) + " appears in two groups";
      group_of[i] = static_cast<int>(g);
    }
    if (g > 0 && !(witness.groups[g - 1].exponent < group.exponent))
      return "group exponents are not strictly increasing";
    if (auto bad = check_group_type(germ, group)) return bad;
    if (semantics == ExponentSemantics::literal) {
      ExtRational intrinsic = contact_exponent(germ.subgerm(group.branches));
      if (intrinsic != group.exponent)
        return "group exponent " + group.exponent.to_string() +
               " differs from the contact exponent " + intrinsic.to_string() +
               " of its branches";
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (group_of[i] < 0) return "branch " + label(i) + " is not in any group";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& ei = witness.groups[static_cast<std::size_t>(group_of[i])];
      const auto& ej = witness.groups[static_cast<std::size_t>(group_of[j])];
      if (auto bad = check_pair(germ, i, j, ei.exponent, ej.exponent))
        return bad;
    }
  }
  return std::nullopt;
}

NGermResult ngerm_check(const GermData& germ, ExponentSemantics semantics) {
  require_valid(germ);
  NGermResult result;
  if (auto why = multi_pair_refutation(germ); !why.empty()) {
    result.refutation = std::move(why);
    return result;
  }
  const std::size_t n = germ.size();

  // Base assignment: forced exponent for singular branches, largest contact
  // for smooth ones (infinity when alone).
  std::vector<ExtRational> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!germ.branch(i).is_smooth()) {
      base[i] = branch_exponent(germ.branch(i));
      continue;
    }
    std::optional<ExtRational> best;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      ExtRational d = germ.contact(i, k);
      if (!best || *best < d) best = d;
    }
    base[i] = best.value_or(ExtRational::infinity());
  }

  std::vector<std::vector<ExtRational>> candidates{base};
  for (std::size_t t = 0; t < n; ++t) {
    if (!germ.branch(t).is_smooth() || base[t].is_infinite()) continue;
    auto lifted = base;
    lifted[t] = ExtRational::infinity();
    candidates.push_back(std::move(lifted));
  }

  std::optional<std::string> first_failure;
  for (const auto& assignment : candidates) {
    Decomposition d = decomposition_from(assignment);
    auto bad = check_witness(germ, d, semantics);
    if (!bad) {
      if (!result.verdict ||
          d.groups.size() < result.witness.groups.size()) {
        result.verdict = true;
        result.witness = std::move(d);
      }
      continue;
    }
    if (!first_failure) first_failure = bad;
  }
  if (!result.verdict) result.refutation = first_failure.value_or("");
  return result;
}

NGermResult ngerm_reference_check(const GermData& germ,
                                  ExponentSemantics semantics) {
  require_valid(germ);
  const std::size_t n = germ.size();
  if (n > kReferenceBranchLimit)
    throw UnsupportedError("reference N-germ check is limited to " +
                           std::to_string(kReferenceBranchLimit) +
                           " branches");

  std::set<ExtRational> pool{ExtRational::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    pool.insert(branch_exponent(germ.branch(i)));
    for (std::size_t j = i + 1; j < n; ++j) pool.insert(germ.contact(i, j));
  }
  const std::vector<ExtRational> values(pool.begin(), pool.end());

  auto type_ok = [&](const std::vector<std::size_t>& block,
                     const ExtRational& e) {
    if (e.is_infinite() && block.size() != 1) return false;
    if (e.is_finite() && e.value() < 1) return false;
    for (std::size_t i : block) {
      const Branch& b = germ.branch(i);
      bool integral = e.is_infinite() || e.is_integer();
      if (integral && !b.is_smooth()) return false;
      if (!integral && (b.pairs.size() != 1 || branch_exponent(b) != e))
        return false;
    }
    for (std::size_t x = 0; x < block.size(); ++x)
      for (std::size_t y = x + 1; y < block.size(); ++y)
        if (germ.contact(block[x], block[y]) != e) return false;
    if (semantics == ExponentSemantics::literal &&
        contact_exponent(germ.subgerm(block)) != e)
      return false;
    return true;
  };

  NGermResult result;
  std::size_t partitions = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<ExtRational> chosen;
  std::vector<bool> used(values.size(), false);

  std::function<bool(std::size_t)> assign = [&](std::size_t b) -> bool {
    if (b == blocks.size()) return true;
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (used[v] || !type_ok(blocks[b], values[v])) continue;
      bool cross_ok = true;
      for (std::size_t c = 0; c < b && cross_ok; ++c) {
        ExtRational expected = min(values[v], chosen[c]);
        for (std::size_t i : blocks[b])
          for (std::size_t j : blocks[c])
            if (germ.contact(i, j) != expected) cross_ok = false;
      }
      if (!cross_ok) continue;
      used[v] = true;
      chosen.push_back(values[v]);
      if (assign(b + 1)) return true;
      chosen.pop_back();
      used[v] = false;
    }
    return false;
  };

  std::function<void(std::size_t)> partition = [&](std::size_t i) {
    if (i == n) {
      ++partitions;
      if (result.verdict && blocks.size() >= result.witness.groups.size())
        return;
      chosen.clear();
      std::fill(used.begin(), used.end(), false);
      if (!assign(0)) return;
      std::vector<std::size_t> order(blocks.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return chosen[x] < chosen[y];
      });
      Decomposition d;
      for (std::size_t k : order) d.groups.push_back({blocks[k], chosen[k]});
      result.verdict = true;
      result.witness = std::move(d);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      partition(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    partition(i + 1);
    blocks.pop_back();
  };
  partition(0);

  if (!result.verdict) {
    result.refutation = multi_pair_refutation(germ);
    if (result.refutation.empty())
      result.refutation = "none of the " + std::to_string(partitions) +
                          " partitions admits an exponent assignment";
  }
  return result;
}

NondegeneracyResult nondegenerate_verdict(const GermData& germ) {
  require_valid(germ);
  NondegeneracyResult out;
  bool all_ngerm = true;
  for (const auto& component : tangential_decomposition(germ).components) {
    ComponentReport report;
    report.branches = component;
    report.is_smooth_branch =
        component.size() == 1 && germ.branch(component[0]).is_smooth();
    report.ngerm = ngerm_check(germ.subgerm(component));
    for (auto& g : report.ngerm.witness.groups)
      for (auto& i : g.branches) i = component[i];
    all_ngerm = all_ngerm && report.ngerm.verdict;
    if (!report.is_smooth_branch) ++out.nonsmooth_count;
    out.components.push_back(std::move(report));
  }
  out.verdict = all_ngerm && out.nonsmooth_count <= 2;
  return out;
}

namespace {

std::int64_t group_multiplicity(const GermData& germ, const Group& group) {
  std::int64_t m = 0;
  for (std::size_t i : group.branches) m += germ.branch(i).multiplicity();
  return m;
}

void require_witness(const GermData& germ, const Decomposition& witness) {
  if (auto bad = check_witness(germ, witness))
    throw InputError("not an N-germ witness: " + *bad);
}

std::int64_t scaled(std::int64_t m, const ExtRational& e) {
  return to_int64(Rational(m) * e.value());
}

}  // namespace

NewtonDiagram model_diagram(const GermData& germ,
                            const Decomposition& witness) {
  require_witness(germ, witness);
  std::vector<ElementaryDiagram> terms;
  for (const auto& group : witness.groups) {
    std::int64_t m = group_multiplicity(germ, group);
    if (group.exponent.is_infinite()) {
      terms.push_back(elem(ExtNat::infinity(), m));
    } else {
      terms.push_back(elem(scaled(m, group.exponent), m));
    }
  }
  return NewtonDiagram(std::move(terms));
}

std::int64_t milnor_from_witness(const GermData& germ,
                                 const Decomposition& witness) {
  require_witness(germ, witness);
  const auto& groups = witness.groups;
  std::int64_t total = 1 - static_cast<std::int64_t>(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::int64_t mi = group_multiplicity(germ, groups[i]);
    if (groups[i].exponent.is_finite())
      total += (mi - 1) * (scaled(mi, groups[i].exponent) - 1);
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      std::int64_t mj = group_multiplicity(germ, groups[j]);
      total += 2 * mj * scaled(mi, min(groups[i].exponent, groups[j].exponent));
    }
  }
  return total;
}

GermNewtonNumber newton_number_germ(const GermData& germ) {
  require_valid(germ);
  const std::int64_t m = multiplicity(germ);
  const std::int64_t generic = (m - 1) * (m - 1);
  auto tangential = tangential_decomposition(germ);

  if (tangential.count() == 1) {
    if (ngerm_check(germ).verdict) return {milnor(germ), true};
    return {generic, false};
  }

  bool exact = true;
  std::vector<std::int64_t> deficiency;
  for (const auto& component : tangential.components) {
    GermData sub = germ.subgerm(component);
    if (ngerm_check(sub).verdict) {
      std::int64_t ms = multiplicity(sub);
      deficiency.push_back(milnor(sub) - (ms - 1) * (ms - 1));
    } else {
      exact = false;
      deficiency.push_back(0);
    }
  }
  std::int64_t best = 0;
  for (std::size_t k = 0; k < deficiency.size(); ++k)
    for (std::size_t l = k + 1; l < deficiency.size(); ++l)
      best = std::max(best, deficiency[k] + deficiency[l]);
  return {generic + best, exact};
}

}  // namespace kouch
