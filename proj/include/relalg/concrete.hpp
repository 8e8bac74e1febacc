#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relalg/atom_structure.hpp"
#include "relalg/bitset.hpp"

namespace relalg {

/// An element of the base set {0..n-1}.
using Point = std::uint32_t;
using PointPair = std::pair<Point, Point>;

/// A binary relation on {0..n-1}, stored as a dense n*n bitmap
/// (bit x*n+y is set iff (x,y) is in the relation).
class ConcreteRelation {
 public:
  explicit ConcreteRelation(std::size_t base_size);
  ConcreteRelation(std::size_t base_size, std::initializer_list<PointPair> pairs);
  ConcreteRelation(std::size_t base_size, const std::vector<PointPair>& pairs);
  ConcreteRelation(std::size_t base_size, Bitset bits);

  static ConcreteRelation identity(std::size_t base_size);
  static ConcreteRelation universal(std::size_t base_size);

  std::size_t base_size() const noexcept { return n_; }
  bool contains(Point x, Point y) const { return bits_.test(index(x, y)); }
  void insert(Point x, Point y) { bits_.set(index(x, y)); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  /// Pairs in lexicographic order.
  std::vector<PointPair> pairs() const;
  /// Lexicographically least pair; the relation must be nonempty.
  PointPair first_pair() const;
  const Bitset& bits() const noexcept { return bits_; }

  bool is_subset_of(const ConcreteRelation& other) const;
  bool intersects(const ConcreteRelation& other) const;
  ConcreteRelation operator|(const ConcreteRelation& other) const;
  ConcreteRelation operator&(const ConcreteRelation& other) const;

  friend bool operator==(const ConcreteRelation&, const ConcreteRelation&) = default;
  friend auto operator<=>(const ConcreteRelation&, const ConcreteRelation&) = default;

 private:
  std::size_t index(Point x, Point y) const;
  void check_same_base(const ConcreteRelation& other) const;

  std::size_t n_;
  Bitset bits_;
};

/// Raised when two relations over different base sets are combined.
class BaseSizeMismatch : public std::invalid_argument {
 public:
  BaseSizeMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("base sizes differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

ConcreteRelation relation_compose(const ConcreteRelation& r, const ConcreteRelation& s);
ConcreteRelation relation_converse(const ConcreteRelation& r);
ConcreteRelation relation_complement(const ConcreteRelation& r);

/// `{(0,1), (1,2)}`
std::string to_string(const ConcreteRelation& r);

/// Raised when a ConcreteAlgebra violates the partition or closure
/// invariants. The message names the witness pair or atom product.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proper relation algebra presented by its atoms: named relations that
/// partition U x U and are closed under converse and composition.
struct ConcreteAlgebra {
  std::size_t base_size = 0;
  std::vector<std::string> names;
  std::vector<ConcreteRelation> atoms;

  friend bool operator==(const ConcreteAlgebra&, const ConcreteAlgebra&) = default;
};

/// Throws AlgebraError on the first violated invariant: empty or mismatched
/// atoms, overlap, a pair not covered, converse or composition not a union
/// of atoms, identity not a union of atoms.
void check_concrete_algebra(const ConcreteAlgebra& c);

/// The abstract atom structure of a concrete algebra. Atom ids follow the
/// order of c.atoms and names are taken from c.names. The cycles are
/// {(x,y,z) : z meets x∘y}.
AtomStructure extract_atom_structure(const ConcreteAlgebra& c);

}  // namespace relalg
