#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/atom_structure.hpp"
#include "relalg/concrete.hpp"
#include "relalg/group_action.hpp"

namespace relalg {

/// An isomorphism between two atom structures, as a map on atom ids.
struct IsoWitness {
  AtomStructure source;
  AtomStructure target;
  /// map[a] is the target atom of source atom a.
  std::vector<AtomId> map;

  IsoWitness inverse() const;
};

/// Every way in which `w` fails to be an isomorphism: not a bijection,
/// identity or converse not preserved, a cycle present on one side only.
/// Empty iff the witness is valid.
std::vector<std::string> check_iso_witness(const IsoWitness& w);

class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("isomorphism search exceeded its budget of " + std::to_string(budget) + " nodes") {}
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Exhaustive backtracking search for an isomorphism a -> b. Source atoms
/// are assigned identity atoms first, then in id order; candidates are tried
/// in target id order, so the witness returned is deterministic. Returns
/// nullopt iff none exists; throws SearchBudgetExceeded when more than
/// `budget` assignments are tried.
std::optional<IsoWitness> find_isomorphism(const AtomStructure& a, const AtomStructure& b,
                                           std::uint64_t budget = kDefaultSearchBudget);

/// Witness that s is isomorphic to the algebra of compatible relations of a.
std::optional<IsoWitness> check_action_represents(const AtomStructure& s, const GroupAction& a,
                                                  std::uint64_t budget = kDefaultSearchBudget);

enum class Z2Condition { kSimple = 1, kPairDense = 2, kAtomsFunctional = 3 };

std::string_view describe(Z2Condition c);

struct Z2Rejection {
  Z2Condition failed;
  AtomId witness;
};

struct Z2Acceptance {
  GroupAction action;
  ConcreteAlgebra algebra;
  IsoWitness witness;
};

struct Z2Decision {
  std::optional<Z2Acceptance> acceptance;
  /// The reported failure: simplicity first, then atom functionality, then
  /// pair-density.
  std::optional<Z2Rejection> rejection;
  /// Every failed condition, in axiom order.
  std::vector<Z2Rejection> failures;

  bool accepted() const noexcept { return acceptance.has_value(); }
};

/// Thrown by decide_z2 on a structure that fails validation.
class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decides whether s is isomorphic to the compatible relations of a
/// two-element group acting on a set. On acceptance the action is built
/// directly: one fixed element per point identity atom and a swapped pair
/// per twin identity atom, allocated in identity-atom order.
Z2Decision decide_z2(const AtomStructure& s, std::uint64_t budget = kDefaultSearchBudget);

/// Re-checks a rejection using only the witness atom and the failed
/// condition: 1;w;1 != 1, or w an identity atom that is not a pair, or
/// neither w nor w̆ a function.
bool rejection_confirmed(const AtomStructure& s, const Z2Rejection& r);

struct VerificationReport {
  std::vector<std::string> issues;

  bool ok() const noexcept { return issues.empty(); }
};

/// Independent re-check of an accepted decision: the action has order at
/// most 2, the algebra equals its compatible relations, and the witness is
/// an isomorphism from the decided structure onto the extracted structure.
VerificationReport verify_decision(const Z2Decision& d);

}  // namespace relalg
