#include "relalg/predicates.hpp"

#include <stdexcept>

namespace relalg {

bool is_point(const Element& x) {
  const AtomStructure& s = x.structure();
  return compose(compose(x, s.one()), x).leq(s.identity());
}

bool is_pair(const Element& x) {
  const AtomStructure& s = x.structure();
  const Element div = s.diversity();
  return compose(compose(compose(compose(x, div), x), div), x).leq(s.identity());
}

bool is_function(const Element& x) { return compose(apply_converse(x), x).leq(x.structure().identity()); }

bool is_twin(const Element& x) {
  if (!is_pair(x)) return false;
  const AtomStructure& s = x.structure();
  bool has_point = false;
  x.atoms().for_each([&](std::size_t a) { has_point = has_point || is_point(s.atom(static_cast<AtomId>(a))); });
  return !has_point;
}

ElementFlags classify_element(const Element& x) {
  if (x.is_zero()) throw std::invalid_argument("classification undefined on zero");
  ElementFlags f;
  f.is_point = is_point(x);
  f.is_pair = is_pair(x);
  f.is_twin = is_twin(x);
  f.is_function = is_function(x);
  return f;
}

namespace {

template <typename Pred>
AtomCheck all_atoms(const Bitset& domain, Pred&& pred) {
  for (std::size_t a = domain.first(); a < domain.size(); a = domain.next(a + 1))
    if (!pred(static_cast<AtomId>(a))) return {false, static_cast<AtomId>(a)};
  return {};
}

}  // namespace

AtomCheck is_simple(const AtomStructure& s) {
  const Element one = s.one();
  return all_atoms(one.atoms(), [&](AtomId a) { return compose(compose(one, s.atom(a)), one) == one; });
}

AtomCheck is_pair_dense(const AtomStructure& s) {
  return all_atoms(s.identity_atoms(), [&](AtomId e) { return is_pair(s.atom(e)); });
}

AtomCheck atoms_functional(const AtomStructure& s) {
  return all_atoms(Bitset::full(s.size()),
                   [&](AtomId a) { return is_function(s.atom(a)) || is_function(s.atom(s.converse(a))); });
}

Z2Axioms check_z2_axioms(const AtomStructure& s) { return {is_simple(s), is_pair_dense(s), atoms_functional(s)}; }

FunctionalDensity functional_density(const AtomStructure& s) {
  Bitset functional(s.size());
  for (AtomId a = 0; a < s.size(); ++a)
    if (is_function(s.atom(a))) functional.set(a);
  const Element fn = s.element(functional);
  Element sum = compose(apply_converse(fn), fn);
  const bool covers = sum == s.one();
  return {std::move(sum), covers};
}

}  // namespace relalg
