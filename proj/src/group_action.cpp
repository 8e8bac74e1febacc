#include "relalg/group_action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace relalg {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Point{0});
  return p;
}

Permutation compose_permutations(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Point>(i);
  return r;
}

bool is_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Point x : p) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::size_t permutation_order(const Permutation& p) {
  const Permutation id = identity_permutation(p.size());
  std::size_t k = 1;
  for (Permutation q = p; q != id; q = compose_permutations(p, q)) ++k;
  return k;
}

GroupAction::GroupAction(std::size_t base_size, std::vector<Permutation> generators, std::size_t max_order)
    : n_(base_size), generators_(std::move(generators)) {
  if (n_ == 0) throw GroupError("base set is empty");
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (!is_permutation(generators_[g], n_))
      throw GroupError("generator " + std::to_string(g + 1) + " is not a permutation of {0.." +
                       std::to_string(n_ - 1) + "}");

  std::set<Permutation> seen{identity_permutation(n_)};
  std::deque<Permutation> queue{identity_permutation(n_)};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation q = compose_permutations(g, p);
      if (seen.insert(q).second) {
        if (seen.size() > max_order)
          throw GroupError("group order exceeds the limit of " + std::to_string(max_order));
        queue.push_back(std::move(q));
      }
    }
  }
  // Finite, so closure under products already gives inverses.
  elements_.assign(seen.begin(), seen.end());
  cyclic_ = std::any_of(elements_.begin(), elements_.end(),
                        [&](const Permutation& p) { return permutation_order(p) == elements_.size(); });
}

bool GroupAction::is_prime_cyclic() const noexcept {
  const std::size_t k = order();
  if (k < 2) return false;
  for (std::size_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

OrbitPartition pair_orbits(const GroupAction& a) {
  const std::size_t n = a.base_size();
  OrbitPartition out{n, {}};
  Bitset claimed(n * n);
  for (std::size_t start = 0; start < n * n; ++start) {
    if (claimed.test(start)) continue;
    ConcreteRelation orbit(n);
    std::vector<PointPair> stack{{static_cast<Point>(start / n), static_cast<Point>(start % n)}};
    orbit.insert(stack.back().first, stack.back().second);
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      for (const auto& g : a.generators()) {
        if (!orbit.contains(g[x], g[y])) {
          orbit.insert(g[x], g[y]);
          stack.emplace_back(g[x], g[y]);
        }
      }
    }
    claimed |= orbit.bits();
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

ConcreteAlgebra rel_algebra(const GroupAction& a) {
  OrbitPartition orbits = pair_orbits(a);
  ConcreteAlgebra c;
  c.base_size = a.base_size();
  const ConcreteRelation id = ConcreteRelation::identity(c.base_size);
  for (std::size_t k = 0; k < orbits.orbits.size(); ++k)
    c.names.push_back((orbits.orbits[k].is_subset_of(id) ? "e" : "a") + std::to_string(k));
  c.atoms = std::move(orbits.orbits);
  try {
    check_concrete_algebra(c);
  } catch (const AlgebraError& e) {
    throw std::logic_error(std::string("compatible relations failed closure check: ") + e.what());
  }
  return c;
}

bool is_compatible(const ConcreteRelation& r, const GroupAction& a) {
  if (r.base_size() != a.base_size()) throw BaseSizeMismatch(r.base_size(), a.base_size());
  for (auto [x, y] : r.pairs())
    for (const auto& g : a.generators())
      if (!r.contains(g[x], g[y])) return false;
  return true;
}

}  // namespace relalg
