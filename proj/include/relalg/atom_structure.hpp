#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/bitset.hpp"

namespace relalg {

using AtomId = std::uint32_t;

/// An allowed cycle of an atom structure: `z <= x ; y`.
struct Cycle {
  AtomId x = 0;
  AtomId y = 0;
  AtomId z = 0;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Raised when an atom structure cannot even be represented: a map that is
/// not total, or an atom id out of range. Semantic problems (a converse that
/// is not an involution, a broken cycle law, ...) are reported by
/// validate_structure instead.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Element;

/// A finite relation algebra given by its atoms.
///
/// Atom ids are dense indices in declaration order. The cycle set is stored
/// exactly as given; use close_under_rotation() first when the input lists
/// only one representative per Peircean rotation class. Instances are
/// immutable after construction.
class AtomStructure {
 public:
  AtomStructure(std::vector<std::string> names, std::vector<AtomId> converse,
                std::span<const AtomId> identity_atoms, std::span<const Cycle> cycles);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(AtomId a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<AtomId> find(std::string_view name) const;
  AtomId converse(AtomId a) const { return converse_.at(a); }
  const std::vector<AtomId>& converse_map() const noexcept { return converse_; }
  bool is_identity_atom(AtomId a) const { return identity_.test(a); }
  const Bitset& identity_atoms() const noexcept { return identity_; }

  bool has_cycle(AtomId x, AtomId y, AtomId z) const { return products_[x * size() + y].test(z); }
  bool has_cycle(const Cycle& c) const { return has_cycle(c.x, c.y, c.z); }
  /// The atoms below x ; y.
  const Bitset& product(AtomId x, AtomId y) const { return products_[x * size() + y]; }
  /// All stored cycles in lexicographic order.
  std::vector<Cycle> cycles() const;

  Element zero() const;
  Element one() const;
  Element identity() const;
  Element diversity() const;
  Element atom(AtomId a) const;
  Element element(Bitset atoms) const;
  /// Element from atom names; throws std::invalid_argument on an unknown name.
  Element element(std::initializer_list<std::string_view> atom_names) const;

  friend bool operator==(const AtomStructure&, const AtomStructure&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<AtomId> converse_;
  Bitset identity_;
  std::vector<Bitset> products_;
};

/// Adds every Peircean rotation of every cycle: (x,y,z) brings in
/// (x̆,z,y) and (z,y̆,x), iterated to a fixpoint.
std::vector<Cycle> close_under_rotation(std::span<const Cycle> cycles, std::span<const AtomId> converse);

/// An element of the Boolean algebra of an AtomStructure: a set of atoms.
/// Holds a non-owning reference; the structure must outlive the element.
class Element {
 public:
  Element(const AtomStructure& structure, Bitset atoms);

  const AtomStructure& structure() const noexcept { return *structure_; }
  const Bitset& atoms() const noexcept { return atoms_; }
  bool contains(AtomId a) const { return atoms_.test(a); }
  bool is_zero() const noexcept { return atoms_.none(); }
  bool is_atom() const noexcept { return atoms_.count() == 1; }
  bool leq(const Element& other) const;

  Element operator|(const Element& other) const;
  Element operator&(const Element& other) const;
  Element complement() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.structure_ == b.structure_ && a.atoms_ == b.atoms_;
  }

 private:
  const AtomStructure* structure_;
  Bitset atoms_;
};

/// Thrown when two elements of different structures are combined.
class StructureMismatch : public std::invalid_argument {
 public:
  StructureMismatch() : std::invalid_argument("elements belong to different atom structures") {}
};

Element compose(const Element& x, const Element& y);
Element apply_converse(const Element& x);

/// Renders an element as `{a, b, ...}` using atom names.
std::string to_string(const Element& x);

enum class ViolationKind {
  kDegenerate,
  kDuplicateName,
  kEmptyName,
  kConverseNotInvolution,
  kNoIdentityAtoms,
  kIdentityNotSelfConverse,
  kCycleLaw,
  kIdentityLaw,
  kMissingDomainAtom,
  kMissingRangeAtom,
  kAssociativity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
};

/// Checks the relation algebra axioms on the atom structure. Every violated
/// law is listed with a witness atom or triple (by name); an empty report
/// means the structure defines a finite relation algebra.
ValidationReport validate_structure(const AtomStructure& s);

}  // namespace relalg
