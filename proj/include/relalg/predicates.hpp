#pragma once

#include <optional>

#include "relalg/atom_structure.hpp"

namespace relalg {

// Element predicates. All of them expect a validated structure.

/// x ; 1 ; x <= 1'
bool is_point(const Element& x);
/// x ; 0' ; x ; 0' ; x <= 1'
bool is_pair(const Element& x);
/// x̆ ; x <= 1'
bool is_function(const Element& x);
/// A pair with no nonzero point below it. Points are closed downward, so it
/// suffices to test the atoms of x.
bool is_twin(const Element& x);

struct ElementFlags {
  bool is_point = false;
  bool is_pair = false;
  bool is_twin = false;
  bool is_function = false;

  friend bool operator==(const ElementFlags&, const ElementFlags&) = default;
};

/// Throws std::invalid_argument on the zero element.
ElementFlags classify_element(const Element& x);

/// Outcome of a universally quantified check over atoms; `witness` names the
/// first atom (in id order) at which it fails.
struct AtomCheck {
  bool holds = true;
  std::optional<AtomId> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// 1 ; a ; 1 = 1 for every atom a.
AtomCheck is_simple(const AtomStructure& s);
/// Every identity atom is a pair.
AtomCheck is_pair_dense(const AtomStructure& s);
/// Every atom or its converse is a function.
AtomCheck atoms_functional(const AtomStructure& s);

/// The three first-order axioms characterising algebras of compatible
/// relations of a two-element group action.
struct Z2Axioms {
  AtomCheck simple;
  AtomCheck pair_dense;
  AtomCheck atoms_functional;

  bool all() const noexcept { return simple.holds && pair_dense.holds && atoms_functional.holds; }
};

Z2Axioms check_z2_axioms(const AtomStructure& s);

/// The join X of x̆ ; y over all functional atoms x and y.
struct FunctionalDensity {
  Element sum;
  bool covers_unit = false;
};

FunctionalDensity functional_density(const AtomStructure& s);

/// True iff the functional atoms satisfy Σ{x̆;y} = 1, the hypothesis of
/// Maddux's representability criterion.
inline bool check_functional_density(const AtomStructure& s) { return functional_density(s).covers_unit; }

}  // namespace relalg
