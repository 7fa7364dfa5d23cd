#pragma once

// Intrinsic description of a plane curve germ up to equisingularity: the
// characteristic pairs of each branch and the intersection multiplicities
// between branches. Intersection numbers are input data; only positivity,
// the m*m lower bound and the ultrametric triple condition are validated.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kouch/rational.hpp"

namespace kouch {

// Puiseux characteristic pair (a, b): a >= 2, b > a, gcd(a, b) = 1.
struct CharPair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const CharPair&, const CharPair&) = default;
};

struct Branch {
  std::vector<CharPair> pairs;  // empty for a smooth branch
  // Milnor number supplied by the caller for branches with several pairs.
  std::optional<std::int64_t> milnor_override;

  bool is_smooth() const { return pairs.empty(); }
  // Product of the a-components; 1 for a smooth branch.
  std::int64_t multiplicity() const;

  friend bool operator==(const Branch&, const Branch&) = default;
};

Branch smooth_branch();
Branch single_pair_branch(std::int64_t a, std::int64_t b);

// Infinity for a smooth branch, b1/a1 otherwise.
ExtRational branch_exponent(const Branch& branch);

class GermData {
 public:
  GermData() = default;
  // `intersections` must be square of the same size as `branches`; entry
  // (i, j) for i != j is (C_i, C_j), the diagonal is ignored.
  GermData(std::vector<Branch> branches,
           std::vector<std::vector<std::int64_t>> intersections);

  std::size_t size() const { return branches_.size(); }
  const std::vector<Branch>& branches() const { return branches_; }
  const Branch& branch(std::size_t i) const { return branches_.at(i); }
  const std::vector<std::vector<std::int64_t>>& intersections() const {
    return intersections_;
  }
  std::int64_t intersection(std::size_t i, std::size_t j) const;

  // d_ij = (C_i, C_j) / (m_i m_j); infinite when i == j.
  ExtRational contact(std::size_t i, std::size_t j) const;

  // Branches restricted to `indices`, in the given order.
  GermData subgerm(const std::vector<std::size_t>& indices) const;
  // Branch i of the result is branch order[i] of this germ.
  GermData permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const GermData&, const GermData&) = default;

 private:
  std::vector<Branch> branches_;
  std::vector<std::vector<std::int64_t>> intersections_;
};

struct Diagnostic {
  std::string message;
  std::vector<std::size_t> branches;  // offending branch indices (0-based)
};

// Empty result means the data is valid. Never throws.
std::vector<Diagnostic> validate(const GermData& germ);
bool is_valid(const GermData& germ);
// Throws InputError listing every diagnostic.
void require_valid(const GermData& germ);

// m(C): sum of branch multiplicities.
std::int64_t multiplicity(const GermData& germ);

// d(A, B) = inf over i in A, j in B of d_ij; infinite iff A = B = {i}.
// Throws std::invalid_argument on empty index sets.
ExtRational contact_order(const GermData& germ,
                          const std::vector<std::size_t>& lhs,
                          const std::vector<std::size_t>& rhs);

// d(C) = inf{ inf_i e(C_i), inf_{i != j} d_ij }.
ExtRational contact_exponent(const GermData& germ);

// sum mu(C_i) + 2 sum_{i<j} (C_i, C_j) - s + 1, with mu = (a-1)(b-1) for a
// one-pair branch. Throws UnsupportedError for a branch with two or more
// pairs and no override.
std::int64_t milnor(const GermData& germ);
// False iff some multi-pair branch lacks an override.
bool milnor_computable(const GermData& germ);

struct TangentialDecomposition {
  // Classes of the equivalence closure of d_ij > 1, each sorted, ordered by
  // smallest member.
  std::vector<std::vector<std::size_t>> components;

  std::size_t count() const { return components.size(); }
};

TangentialDecomposition tangential_decomposition(const GermData& germ);

// t(C) == m(C).
bool is_ordinary(const GermData& germ);

}  // namespace kouch
