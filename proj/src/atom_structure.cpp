#include "relalg/atom_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace relalg {

namespace {

// Triple-based laws can fail on a large fraction of all triples; the report
// keeps the first few witnesses of each kind.
constexpr std::size_t kMaxTripleWitnesses = 8;

std::string triple_name(const AtomStructure& s, AtomId x, AtomId y, AtomId z) {
  return "(" + s.name(x) + ", " + s.name(y) + ", " + s.name(z) + ")";
}

}  // namespace

AtomStructure::AtomStructure(std::vector<std::string> names, std::vector<AtomId> converse,
                             std::span<const AtomId> identity_atoms, std::span<const Cycle> cycles)
    : names_(std::move(names)), converse_(std::move(converse)), identity_(names_.size()) {
  const std::size_t n = names_.size();
  if (converse_.size() != n)
    throw StructureError("converse map has " + std::to_string(converse_.size()) + " entries for " +
                         std::to_string(n) + " atoms");
  for (AtomId c : converse_)
    if (c >= n) throw StructureError("converse map refers to atom id " + std::to_string(c));
  for (AtomId e : identity_atoms) {
    if (e >= n) throw StructureError("identity atom id " + std::to_string(e) + " out of range");
    identity_.set(e);
  }
  products_.assign(n * n, Bitset(n));
  for (const Cycle& c : cycles) {
    if (c.x >= n || c.y >= n || c.z >= n) throw StructureError("cycle refers to an atom id out of range");
    products_[c.x * n + c.y].set(c.z);
  }
}

std::optional<AtomId> AtomStructure::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<AtomId>(i);
  return std::nullopt;
}

std::vector<Cycle> AtomStructure::cycles() const {
  std::vector<Cycle> out;
  const auto n = static_cast<AtomId>(size());
  for (AtomId x = 0; x < n; ++x)
    for (AtomId y = 0; y < n; ++y)
      product(x, y).for_each([&](std::size_t z) { out.push_back({x, y, static_cast<AtomId>(z)}); });
  return out;
}

Element AtomStructure::zero() const { return Element(*this, Bitset(size())); }
Element AtomStructure::one() const { return Element(*this, Bitset::full(size())); }
Element AtomStructure::identity() const { return Element(*this, identity_); }
Element AtomStructure::diversity() const { return Element(*this, identity_.complement()); }

Element AtomStructure::atom(AtomId a) const {
  if (a >= size()) throw std::out_of_range("atom id out of range");
  Bitset b(size());
  b.set(a);
  return Element(*this, std::move(b));
}

Element AtomStructure::element(Bitset atoms) const { return Element(*this, std::move(atoms)); }

Element AtomStructure::element(std::initializer_list<std::string_view> atom_names) const {
  Bitset b(size());
  for (auto nm : atom_names) {
    auto id = find(nm);
    if (!id) throw std::invalid_argument("unknown atom '" + std::string(nm) + "'");
    b.set(*id);
  }
  return Element(*this, std::move(b));
}

std::vector<Cycle> close_under_rotation(std::span<const Cycle> cycles, std::span<const AtomId> converse) {
  std::set<Cycle> seen(cycles.begin(), cycles.end());
  std::vector<Cycle> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Cycle c = work.back();
    work.pop_back();
    for (Cycle r : {Cycle{converse[c.x], c.z, c.y}, Cycle{c.z, converse[c.y], c.x}})
      if (seen.insert(r).second) work.push_back(r);
  }
  return {seen.begin(), seen.end()};
}

Element::Element(const AtomStructure& structure, Bitset atoms) : structure_(&structure), atoms_(std::move(atoms)) {
  if (atoms_.size() != structure.size()) throw std::invalid_argument("atom set size does not match structure");
}

bool Element::leq(const Element& other) const {
  if (structure_ != other.structure_) throw StructureMismatch();
  return atoms_.is_subset_of(other.atoms_);
}

Element Element::operator|(const Element& other) const {
  if (structure_ != other.structure_) throw StructureMismatch();
  return Element(*structure_, atoms_ | other.atoms_);
}

Element Element::operator&(const Element& other) const {
  if (structure_ != other.structure_) throw StructureMismatch();
  return Element(*structure_, atoms_ & other.atoms_);
}

Element Element::complement() const { return Element(*structure_, atoms_.complement()); }

Element compose(const Element& x, const Element& y) {
  if (&x.structure() != &y.structure()) throw StructureMismatch();
  const AtomStructure& s = x.structure();
  Bitset out(s.size());
  x.atoms().for_each([&](std::size_t a) {
    y.atoms().for_each([&](std::size_t b) { out |= s.product(static_cast<AtomId>(a), static_cast<AtomId>(b)); });
  });
  return Element(s, std::move(out));
}

Element apply_converse(const Element& x) {
  const AtomStructure& s = x.structure();
  Bitset out(s.size());
  x.atoms().for_each([&](std::size_t a) { out.set(s.converse(static_cast<AtomId>(a))); });
  return Element(s, std::move(out));
}

std::string to_string(const Element& x) {
  std::string out = "{";
  bool first = true;
  x.atoms().for_each([&](std::size_t a) {
    if (!first) out += ", ";
    first = false;
    out += x.structure().name(static_cast<AtomId>(a));
  });
  return out + "}";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDegenerate: return "degenerate";
    case ViolationKind::kDuplicateName: return "duplicate-name";
    case ViolationKind::kEmptyName: return "empty-name";
    case ViolationKind::kConverseNotInvolution: return "converse-not-involution";
    case ViolationKind::kNoIdentityAtoms: return "no-identity-atoms";
    case ViolationKind::kIdentityNotSelfConverse: return "identity-not-self-converse";
    case ViolationKind::kCycleLaw: return "cycle-law";
    case ViolationKind::kIdentityLaw: return "identity-law";
    case ViolationKind::kMissingDomainAtom: return "missing-domain-atom";
    case ViolationKind::kMissingRangeAtom: return "missing-range-atom";
    case ViolationKind::kAssociativity: return "associativity";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_structure(const AtomStructure& s) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string w) { report.violations.push_back({k, std::move(w)}); };
  const auto n = static_cast<AtomId>(s.size());

  if (n == 0) {
    add(ViolationKind::kDegenerate, "structure has no atoms (one = zero)");
    return report;
  }

  std::unordered_map<std::string, AtomId> by_name;
  for (AtomId a = 0; a < n; ++a) {
    if (s.name(a).empty()) add(ViolationKind::kEmptyName, "atom #" + std::to_string(a));
    if (!by_name.emplace(s.name(a), a).second) add(ViolationKind::kDuplicateName, s.name(a));
  }

  for (AtomId a = 0; a < n; ++a)
    if (s.converse(s.converse(a)) != a)
      add(ViolationKind::kConverseNotInvolution, s.name(a) + " -> " + s.name(s.converse(a)) + " -> " +
                                                     s.name(s.converse(s.converse(a))));

  if (s.identity_atoms().none()) add(ViolationKind::kNoIdentityAtoms, "identity atom list is empty");
  s.identity_atoms().for_each([&](std::size_t e) {
    if (s.converse(static_cast<AtomId>(e)) != e)
      add(ViolationKind::kIdentityNotSelfConverse, s.name(static_cast<AtomId>(e)));
  });

  std::size_t cycle_law = 0;
  std::size_t identity_law = 0;
  for (const Cycle& c : s.cycles()) {
    for (Cycle r : {Cycle{s.converse(c.x), c.z, c.y}, Cycle{c.z, s.converse(c.y), c.x}}) {
      if (!s.has_cycle(r) && cycle_law++ < kMaxTripleWitnesses)
        add(ViolationKind::kCycleLaw, triple_name(s, c.x, c.y, c.z) + " present but rotation " +
                                          triple_name(s, r.x, r.y, r.z) + " missing");
    }
    const bool left_unit = s.is_identity_atom(c.x) && c.y != c.z;
    const bool right_unit = s.is_identity_atom(c.y) && c.x != c.z;
    if ((left_unit || right_unit) && identity_law++ < kMaxTripleWitnesses)
      add(ViolationKind::kIdentityLaw, triple_name(s, c.x, c.y, c.z) + " moves an atom through an identity atom");
  }

  for (AtomId a = 0; a < n; ++a) {
    std::size_t domains = 0;
    std::size_t ranges = 0;
    s.identity_atoms().for_each([&](std::size_t e) {
      domains += s.has_cycle(static_cast<AtomId>(e), a, a) ? 1 : 0;
      ranges += s.has_cycle(a, static_cast<AtomId>(e), a) ? 1 : 0;
    });
    if (domains != 1)
      add(ViolationKind::kMissingDomainAtom,
          s.name(a) + " has " + std::to_string(domains) + " identity atoms e with (e, a, a)");
    if (ranges != 1)
      add(ViolationKind::kMissingRangeAtom,
          s.name(a) + " has " + std::to_string(ranges) + " identity atoms f with (a, f, a)");
  }

  // (a;b);c = a;(b;c) on atoms; distributivity lifts it to all elements.
  std::size_t assoc = 0;
  Bitset lhs(n);
  Bitset rhs(n);
  for (AtomId a = 0; a < n && assoc < kMaxTripleWitnesses; ++a) {
    for (AtomId b = 0; b < n && assoc < kMaxTripleWitnesses; ++b) {
      const Bitset& ab = s.product(a, b);
      for (AtomId c = 0; c < n; ++c) {
        lhs = Bitset(n);
        rhs = Bitset(n);
        ab.for_each([&](std::size_t z) { lhs |= s.product(static_cast<AtomId>(z), c); });
        s.product(b, c).for_each([&](std::size_t w) { rhs |= s.product(a, static_cast<AtomId>(w)); });
        if (lhs != rhs && assoc++ < kMaxTripleWitnesses) {
          Element l(s, lhs);
          Element r(s, rhs);
          add(ViolationKind::kAssociativity, "(" + s.name(a) + ";" + s.name(b) + ");" + s.name(c) + " = " +
                                                 to_string(l) + " but " + s.name(a) + ";(" + s.name(b) + ";" +
                                                 s.name(c) + ") = " + to_string(r));
        }
      }
    }
  }
  return report;
}

}  // namespace relalg
