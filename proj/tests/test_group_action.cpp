#include <random>
#include <set>

#include "doctest.h"
#include "relalg/garra.hpp"
#include "relalg/group_action.hpp"
#include "test_support.hpp"

using namespace relalg;
using namespace relalg::testing;

namespace {

std::set<oracle::Rel> orbit_set(const OrbitPartition& p) {
  std::set<oracle::Rel> out;
  for (const auto& r : p.orbits) out.insert(oracle::to_oracle(r));
  return out;
}

std::vector<oracle::Perm> to_oracle_perms(const std::vector<Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.emplace_back(p.begin(), p.end());
  return out;
}

}  // namespace

TEST_CASE("permutation helpers") {
  const Permutation p{1, 2, 0};
  const Permutation q{0, 2, 1};
  CHECK(compose_permutations(p, q) == Permutation{1, 0, 2});
  CHECK(compose_permutations(p, inverse_permutation(p)) == identity_permutation(3));
  CHECK(permutation_order(p) == 3);
  CHECK(permutation_order(Permutation{1, 0, 3, 4, 2}) == 6);
  CHECK(is_permutation(p, 3));
  CHECK_FALSE(is_permutation({0, 0, 1}, 3));
  CHECK_FALSE(is_permutation({0, 1}, 3));
  CHECK_FALSE(is_permutation({0, 1, 3}, 3));
}

TEST_CASE("group closure") {
  const GroupAction z3 = load_act("z3_self.act");
  CHECK(z3.order() == 3);
  CHECK(z3.is_cyclic());
  CHECK(z3.is_prime_cyclic());
  CHECK(z3.elements().front() == identity_permutation(3));

  const GroupAction d5 = load_act("d5.act");
  CHECK(d5.order() == 10);
  CHECK_FALSE(d5.is_cyclic());
  CHECK(oracle::group_closure(5, to_oracle_perms(d5.generators())).size() == 10);

  const GroupAction trivial(4, {});
  CHECK(trivial.order() == 1);
  CHECK_FALSE(trivial.is_prime_cyclic());

  const GroupAction swap = load_act("z2_swap.act");
  CHECK(swap.is_z2());

  CHECK(GroupAction(6, {{1, 2, 3, 4, 5, 0}}).is_cyclic());
  CHECK_FALSE(GroupAction(6, {{1, 2, 3, 4, 5, 0}}).is_prime_cyclic());
}

TEST_CASE("group closure matches the naive oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 2; ++k) {
      Permutation g = identity_permutation(n);
      std::shuffle(g.begin(), g.end(), rng);
      gens.push_back(g);
    }
    const GroupAction a(n, gens);
    const auto expected = oracle::group_closure(static_cast<int>(n), to_oracle_perms(gens));
    CHECK(a.order() == expected.size());
    std::set<oracle::Perm> got;
    for (const auto& e : a.elements()) got.emplace(e.begin(), e.end());
    CHECK(got == expected);
  }
}

TEST_CASE("bad generators are refused") {
  CHECK_THROWS_AS(GroupAction(0, {}), GroupError);
  CHECK_THROWS_AS(GroupAction(3, {{0, 0, 1}}), GroupError);
  CHECK_THROWS_AS(GroupAction(3, {{0, 1}}), GroupError);
  CHECK_THROWS_AS(GroupAction(3, {{0, 1, 5}}), GroupError);
  // S_8 has order 40320.
  CHECK_THROWS_AS(GroupAction(8, {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}), GroupError);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(GroupAction(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, 9), GroupError);
  CHECK(GroupAction(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, 10).order() == 10);
}

TEST_CASE("pair orbits of Z3 acting on itself") {
  const OrbitPartition p = pair_orbits(load_act("z3_self.act"));
  REQUIRE(p.orbits.size() == 3);
  CHECK(p.orbits[0] == ConcreteRelation(3, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(p.orbits[1] == ConcreteRelation(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(p.orbits[2] == ConcreteRelation(3, {{1, 0}, {2, 1}, {0, 2}}));
}

TEST_CASE("pair orbits of D5") {
  const OrbitPartition p = pair_orbits(load_act("d5.act"));
  REQUIRE(p.orbits.size() == 3);
  CHECK(p.orbits[0] == ConcreteRelation(5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  CHECK(p.orbits[1] ==
        ConcreteRelation(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 4}}));
  CHECK(p.orbits[2] ==
        ConcreteRelation(5, {{0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}, {2, 0}, {3, 1}, {4, 2}, {0, 3}, {1, 4}}));
}

TEST_CASE("pair orbits of the trivial group are singletons") {
  const OrbitPartition p = pair_orbits(GroupAction(3, {}));
  CHECK(p.orbits.size() == 9);
  for (const auto& r : p.orbits) CHECK(r.size() == 1);
}

TEST_CASE("pair orbits match the oracle and divide the group order") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<Permutation> gens{random_cyclic_generator(rng, trial % 3 == 0 ? 3 : 2, n)};
    if (trial % 4 == 0) gens.push_back(random_cyclic_generator(rng, 2, n));
    const GroupAction a(n, gens);
    const OrbitPartition p = pair_orbits(a);
    const auto expected = oracle::pair_orbits(static_cast<int>(n), oracle::group_closure(static_cast<int>(n), to_oracle_perms(gens)));
    CHECK(orbit_set(p) == std::set<oracle::Rel>(expected.begin(), expected.end()));
    std::size_t total = 0;
    for (const auto& r : p.orbits) {
      CHECK(a.order() % r.size() == 0);
      total += r.size();
    }
    CHECK(total == n * n);
    for (std::size_t i = 1; i < p.orbits.size(); ++i) CHECK(p.orbits[i - 1].first_pair() < p.orbits[i].first_pair());
  }
}

TEST_CASE("compatible relations of the swap") {
  const GroupAction swap = load_act("z2_swap.act");
  const ConcreteAlgebra c = rel_algebra(swap);
  CHECK(c.names == std::vector<std::string>{"e0", "a1"});
  CHECK(c.atoms[0] == ConcreteRelation::identity(2));
  CHECK(c.atoms[1] == ConcreteRelation(2, {{0, 1}, {1, 0}}));
  CHECK(find_isomorphism(extract_atom_structure(c), load_ra("z2_swap.ra")).has_value());

  CHECK(is_compatible(ConcreteRelation::identity(2), swap));
  CHECK(is_compatible(ConcreteRelation(2), swap));
  CHECK_FALSE(is_compatible(ConcreteRelation(2, {{0, 1}}), swap));
  CHECK_FALSE(is_compatible(ConcreteRelation(2, {{0, 0}}), swap));
  CHECK_THROWS_AS(is_compatible(ConcreteRelation(3), swap), BaseSizeMismatch);
}

TEST_CASE("compatible relations are exactly unions of orbits") {
  // Z3 on 3 points and a transposition on 3 points: 2^9 relations each.
  for (const GroupAction& a : {GroupAction(3, {{1, 2, 0}}), GroupAction(3, {{1, 0, 2}}), GroupAction(3, {})}) {
    const OrbitPartition p = pair_orbits(a);
    std::set<oracle::Rel> unions;
    for (std::size_t mask = 0; mask < (std::size_t{1} << p.orbits.size()); ++mask) {
      oracle::Rel r;
      for (std::size_t i = 0; i < p.orbits.size(); ++i)
        if (mask >> i & 1U) r = oracle::unite(r, oracle::to_oracle(p.orbits[i]));
      unions.insert(r);
    }
    std::set<oracle::Rel> compatible;
    for (std::size_t mask = 0; mask < 512; ++mask) {
      Bitset bits(9);
      for (std::size_t i = 0; i < 9; ++i)
        if (mask >> i & 1U) bits.set(i);
      const ConcreteRelation r(3, bits);
      if (is_compatible(r, a)) compatible.insert(oracle::to_oracle(r));
    }
    CHECK(compatible == unions);
  }
}

TEST_CASE("rel_algebra atom names and identity atoms") {
  const ConcreteAlgebra c = rel_algebra(GroupAction(3, {{1, 0, 2}}));
  // Orbits by least pair: {(0,0),(1,1)}, {(0,1),(1,0)}, {(0,2),(1,2)}, {(2,0),(2,1)}, {(2,2)}.
  CHECK(c.names == std::vector<std::string>{"e0", "a1", "a2", "a3", "e4"});
  CHECK_NOTHROW(check_concrete_algebra(c));
}
