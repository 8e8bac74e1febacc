#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relalg/concrete.hpp"

namespace relalg {

/// Points and twins of a pair-dense concrete algebra: the one- and
/// two-element pieces of the identity cut out by identity atoms.
struct BasePartition {
  std::size_t base_size = 0;
  /// Sorted.
  std::vector<Point> points;
  /// Each twin as (a, b) with a < b; sorted.
  std::vector<PointPair> twins;

  bool is_point(Point x) const;
  /// Index into `twins` of the twin containing x.
  std::optional<std::size_t> twin_of(Point x) const;

  friend bool operator==(const BasePartition&, const BasePartition&) = default;
};

class StructureTheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads points and twins off the identity atoms of c. Throws
/// StructureTheoryError when an identity atom holds three or more diagonal
/// pairs, and AlgebraError when c itself is malformed.
BasePartition derive_points_twins(const ConcreteAlgebra& c);

/// Re-derives the partition from the abstract inequalities: every point
/// atom satisfies x;1;x <= 1' and every twin atom is a pair containing no
/// point.
bool points_twins_match_inequalities(const ConcreteAlgebra& c, const BasePartition& bp);

/// The six atom shapes of a simple pair-dense algebra:
///   1  {(a,a)} for a point a
///   2  {(a,a),(b,b)} or {(a,b),(b,a)} for a twin {a,b}
///   3  {(a,b)} for distinct points
///   4  {(a,c),(b,c)} or its converse, twin {a,b} and point c
///   5  {(a,c),(b,d)} between related twins
///   6  {a,b} x {c,d} between unrelated twins
enum class AtomType { kPoint = 1, kTwin = 2, kPointPoint = 3, kTwinPoint = 4, kTwinTwinSplit = 5, kTwinTwinFull = 6 };

struct ClassifiedAtom {
  AtomType type;
  /// Source block then target block (a single block for types 1 and 2).
  std::vector<std::vector<Point>> blocks;
};

struct AtomClassification {
  /// Parallel to the atoms of the classified algebra.
  std::vector<ClassifiedAtom> atoms;
  /// Related distinct twins as (i, j), i < j, indices into BasePartition::twins.
  std::vector<std::pair<std::size_t, std::size_t>> tilde;

  /// The ∼ relation, reflexive on twins.
  bool related(std::size_t i, std::size_t j) const;
  std::size_t count(AtomType t) const;
};

/// Throws StructureTheoryError naming the atom that matches none of the six
/// shapes, or the twins at which ∼ fails to be transitive.
AtomClassification classify_atoms(const ConcreteAlgebra& c, const BasePartition& bp);

}  // namespace relalg
