#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relalg/concrete.hpp"

namespace relalg {

/// A permutation of {0..n-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<Point>;

Permutation identity_permutation(std::size_t n);
/// (p * q)(i) = p(q(i))
Permutation compose_permutations(const Permutation& p, const Permutation& q);
Permutation inverse_permutation(const Permutation& p);
bool is_permutation(const Permutation& p, std::size_t n);

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 10'000;

/// A finite permutation group acting on {0..n-1}, given by generators. The
/// group elements are materialised once by breadth-first closure.
class GroupAction {
 public:
  /// Throws GroupError on an empty base set, a generator of the wrong length
  /// or with a repeated image, or a group larger than `max_order`.
  GroupAction(std::size_t base_size, std::vector<Permutation> generators,
              std::size_t max_order = kDefaultMaxGroupOrder);

  std::size_t base_size() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Sorted; the identity permutation comes first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool is_z2() const noexcept { return order() == 2; }
  bool is_cyclic() const noexcept { return cyclic_; }
  bool is_prime_cyclic() const noexcept;

 private:
  std::size_t n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  bool cyclic_ = false;
};

std::size_t permutation_order(const Permutation& p);

/// Partition of U x U into orbits of the diagonal action (x,y) -> (gx,gy).
struct OrbitPartition {
  std::size_t base_size = 0;
  /// Ordered by least representative pair.
  std::vector<ConcreteRelation> orbits;
};

OrbitPartition pair_orbits(const GroupAction& a);

/// The algebra of compatible relations. Atoms are the pair orbits; identity
/// atoms are named `e<k>` and the others `a<k>`, k being the atom index.
/// Closure is re-verified; a failure throws std::logic_error.
ConcreteAlgebra rel_algebra(const GroupAction& a);

/// (x,y) in r implies (gx,gy) in r for every generator g.
bool is_compatible(const ConcreteRelation& r, const GroupAction& a);

}  // namespace relalg
