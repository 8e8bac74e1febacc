#include "relalg/concrete.hpp"

#include <unordered_set>

namespace relalg {

ConcreteRelation::ConcreteRelation(std::size_t base_size) : n_(base_size), bits_(base_size * base_size) {}

ConcreteRelation::ConcreteRelation(std::size_t base_size, std::initializer_list<PointPair> pairs)
    : ConcreteRelation(base_size) {
  for (auto [x, y] : pairs) insert(x, y);
}

ConcreteRelation::ConcreteRelation(std::size_t base_size, const std::vector<PointPair>& pairs)
    : ConcreteRelation(base_size) {
  for (auto [x, y] : pairs) insert(x, y);
}

ConcreteRelation::ConcreteRelation(std::size_t base_size, Bitset bits) : n_(base_size), bits_(std::move(bits)) {
  if (bits_.size() != n_ * n_) throw std::invalid_argument("relation bitmap size does not match base size");
}

ConcreteRelation ConcreteRelation::identity(std::size_t base_size) {
  ConcreteRelation r(base_size);
  for (Point x = 0; x < base_size; ++x) r.insert(x, x);
  return r;
}

ConcreteRelation ConcreteRelation::universal(std::size_t base_size) {
  return ConcreteRelation(base_size, Bitset::full(base_size * base_size));
}

std::size_t ConcreteRelation::index(Point x, Point y) const {
  if (x >= n_ || y >= n_)
    throw std::out_of_range("pair (" + std::to_string(x) + "," + std::to_string(y) + ") outside base set of size " +
                            std::to_string(n_));
  return static_cast<std::size_t>(x) * n_ + y;
}

std::vector<PointPair> ConcreteRelation::pairs() const {
  std::vector<PointPair> out;
  bits_.for_each([&](std::size_t i) { out.emplace_back(static_cast<Point>(i / n_), static_cast<Point>(i % n_)); });
  return out;
}

PointPair ConcreteRelation::first_pair() const {
  const std::size_t i = bits_.first();
  if (i >= bits_.size()) throw std::logic_error("first_pair of an empty relation");
  return {static_cast<Point>(i / n_), static_cast<Point>(i % n_)};
}

void ConcreteRelation::check_same_base(const ConcreteRelation& other) const {
  if (n_ != other.n_) throw BaseSizeMismatch(n_, other.n_);
}

bool ConcreteRelation::is_subset_of(const ConcreteRelation& other) const {
  check_same_base(other);
  return bits_.is_subset_of(other.bits_);
}

bool ConcreteRelation::intersects(const ConcreteRelation& other) const {
  check_same_base(other);
  return bits_.intersects(other.bits_);
}

ConcreteRelation ConcreteRelation::operator|(const ConcreteRelation& other) const {
  check_same_base(other);
  return ConcreteRelation(n_, bits_ | other.bits_);
}

ConcreteRelation ConcreteRelation::operator&(const ConcreteRelation& other) const {
  check_same_base(other);
  return ConcreteRelation(n_, bits_ & other.bits_);
}

ConcreteRelation relation_compose(const ConcreteRelation& r, const ConcreteRelation& s) {
  const std::size_t n = r.base_size();
  if (n != s.base_size()) throw BaseSizeMismatch(n, s.base_size());
  Bitset out(n * n);
  r.bits().for_each([&](std::size_t i) {
    const std::size_t x = i / n;
    const std::size_t y = i % n;
    for (std::size_t z = 0; z < n; ++z)
      if (s.bits().test(y * n + z)) out.set(x * n + z);
  });
  return ConcreteRelation(n, std::move(out));
}

ConcreteRelation relation_converse(const ConcreteRelation& r) {
  ConcreteRelation out(r.base_size());
  for (auto [x, y] : r.pairs()) out.insert(y, x);
  return out;
}

ConcreteRelation relation_complement(const ConcreteRelation& r) {
  return ConcreteRelation(r.base_size(), r.bits().complement());
}

std::string to_string(const ConcreteRelation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return out + "}";
}

namespace {

std::string pair_name(PointPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

// Atom index of every pair of U x U; assumes the partition check passed.
std::vector<std::size_t> atom_index(const ConcreteAlgebra& c) {
  std::vector<std::size_t> idx(c.base_size * c.base_size);
  for (std::size_t a = 0; a < c.atoms.size(); ++a) c.atoms[a].bits().for_each([&](std::size_t i) { idx[i] = a; });
  return idx;
}

// Throws unless `r` is exactly the union of the atoms it meets; returns
// those atoms.
Bitset covering_atoms(const ConcreteAlgebra& c, const std::vector<std::size_t>& idx, const ConcreteRelation& r,
                      const std::string& what) {
  Bitset hit(c.atoms.size());
  r.bits().for_each([&](std::size_t i) { hit.set(idx[i]); });
  hit.for_each([&](std::size_t a) {
    if (!c.atoms[a].is_subset_of(r)) {
      const ConcreteRelation outside(c.base_size, c.atoms[a].bits() - r.bits());
      throw AlgebraError(what + " is not a union of atoms: it meets atom " + c.names[a] + " but misses " +
                         pair_name(outside.first_pair()));
    }
  });
  return hit;
}

}  // namespace

void check_concrete_algebra(const ConcreteAlgebra& c) {
  const std::size_t n = c.base_size;
  if (n == 0) throw AlgebraError("base set is empty");
  if (c.names.size() != c.atoms.size()) throw AlgebraError("atom names and atom relations differ in number");
  std::unordered_set<std::string> seen;
  for (const auto& nm : c.names)
    if (!seen.insert(nm).second) throw AlgebraError("duplicate atom name " + nm);

  Bitset covered(n * n);
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    const ConcreteRelation& r = c.atoms[a];
    if (r.base_size() != n) throw AlgebraError("atom " + c.names[a] + " has a different base size");
    if (r.empty()) throw AlgebraError("atom " + c.names[a] + " is empty");
    if (covered.intersects(r.bits())) {
      const ConcreteRelation both(n, covered & r.bits());
      throw AlgebraError("atoms overlap at " + pair_name(both.first_pair()) + " (atom " + c.names[a] + ")");
    }
    covered |= r.bits();
  }
  if (covered.count() != n * n) {
    const ConcreteRelation missing(n, covered.complement());
    throw AlgebraError("pair " + pair_name(missing.first_pair()) + " is in no atom");
  }

  const auto idx = atom_index(c);
  covering_atoms(c, idx, ConcreteRelation::identity(n), "the identity relation");
  for (std::size_t a = 0; a < c.atoms.size(); ++a)
    covering_atoms(c, idx, relation_converse(c.atoms[a]), "the converse of " + c.names[a]);
  for (std::size_t a = 0; a < c.atoms.size(); ++a)
    for (std::size_t b = 0; b < c.atoms.size(); ++b)
      covering_atoms(c, idx, relation_compose(c.atoms[a], c.atoms[b]), c.names[a] + " ; " + c.names[b]);
}

AtomStructure extract_atom_structure(const ConcreteAlgebra& c) {
  check_concrete_algebra(c);
  const std::size_t n = c.base_size;
  const auto idx = atom_index(c);
  const std::size_t k = c.atoms.size();
  const ConcreteRelation id = ConcreteRelation::identity(n);

  std::vector<AtomId> converse(k);
  std::vector<AtomId> identity;
  std::vector<Cycle> cycles;
  for (std::size_t a = 0; a < k; ++a) {
    auto [x, y] = c.atoms[a].first_pair();
    converse[a] = static_cast<AtomId>(idx[static_cast<std::size_t>(y) * n + x]);
    if (c.atoms[a].is_subset_of(id)) identity.push_back(static_cast<AtomId>(a));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const ConcreteRelation ab = relation_compose(c.atoms[a], c.atoms[b]);
      Bitset hit(k);
      ab.bits().for_each([&](std::size_t i) { hit.set(idx[i]); });
      hit.for_each([&](std::size_t z) {
        cycles.push_back({static_cast<AtomId>(a), static_cast<AtomId>(b), static_cast<AtomId>(z)});
      });
    }
  return AtomStructure(c.names, std::move(converse), identity, cycles);
}

}  // namespace relalg
