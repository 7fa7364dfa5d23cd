#pragma once

// Newton's germs (N-germs) and Kouchnirenko nondegeneracy decided from
// intrinsic data.
//
// A decomposition assigns every branch to a group carrying an exponent e:
//   * exponents strictly increase and the first is >= 1;
//   * non-integral e: every branch of the group has the single
//     characteristic pair (a, b) with b/a = e;
//   * integral or infinite e: every branch is smooth; e = inf only for a
//     singleton group;
//   * any two distinct branches have contact min(e, e') of their groups
//     (same group included).
// Under the relaxed semantics (default) a singleton smooth group may carry
// any admissible integer. The literal semantics additionally requires e to
// equal the intrinsic contact exponent of its group, which is infinite for a
// singleton smooth branch.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kouch/diagram.hpp"
#include "kouch/germ.hpp"
#include "kouch/rational.hpp"

namespace kouch {

enum class ExponentSemantics { relaxed, literal };

struct Group {
  std::vector<std::size_t> branches;  // sorted, 0-based
  ExtRational exponent;

  friend bool operator==(const Group&, const Group&) = default;
};

struct Decomposition {
  std::vector<Group> groups;  // increasing exponent

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct NGermResult {
  bool verdict = false;
  Decomposition witness;   // meaningful when verdict is true
  std::string refutation;  // meaningful when verdict is false
};

// Re-checks every condition directly against the intersection matrix.
// Returns a description of the first violated condition, or nullopt.
std::optional<std::string> check_witness(
    const GermData& germ, const Decomposition& witness,
    ExponentSemantics semantics = ExponentSemantics::relaxed);

// Structural decision. Each smooth branch other than a possible top
// singleton must carry its largest contact with the other branches; the
// search therefore tries that assignment and, for each smooth branch, the
// variant where it alone is lifted to infinity. Among valid witnesses the
// one with the fewest groups is returned, ties broken by branch index.
// Throws InputError on invalid germ data.
NGermResult ngerm_check(const GermData& germ,
                        ExponentSemantics semantics = ExponentSemantics::relaxed);

inline constexpr std::size_t kReferenceBranchLimit = 8;

// Exhaustive oracle: every set partition of the branches, every injective
// exponent assignment from {branch exponents} U {contacts} U {inf}.
// Throws UnsupportedError above kReferenceBranchLimit branches.
NGermResult ngerm_reference_check(
    const GermData& germ,
    ExponentSemantics semantics = ExponentSemantics::relaxed);

struct ComponentReport {
  std::vector<std::size_t> branches;
  NGermResult ngerm;  // witness indices refer to the whole germ
  bool is_smooth_branch = false;
};

struct NondegeneracyResult {
  bool verdict = false;
  std::vector<ComponentReport> components;
  std::size_t nonsmooth_count = 0;
};

// Nondegenerate in some chart iff every tangential component is an N-germ
// and at most two components are not single smooth branches.
NondegeneracyResult nondegenerate_verdict(const GermData& germ);

// Sum over groups of {m_i e_i \ m_i}; the infinite group contributes
// {inf\1}. Throws InputError unless `witness` passes check_witness.
NewtonDiagram model_diagram(const GermData& germ, const Decomposition& witness);

// sum (m_i - 1)(m_i e_i - 1) + 2 sum_{i<j} m_i m_j min(e_i, e_j) - s + 1.
std::int64_t milnor_from_witness(const GermData& germ,
                                 const Decomposition& witness);

struct GermNewtonNumber {
  std::int64_t value = 0;
  bool exact = false;  // false: value is only a lower bound
};

// Supremum of nu over all charts. Exact for an N-germ with t = 1, and for
// t > 1 when every tangential component is an N-germ; otherwise a lower
// bound built from the same formula with unknown components counted as
// ordinary.
GermNewtonNumber newton_number_germ(const GermData& germ);

}  // namespace kouch
