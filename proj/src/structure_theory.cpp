#include "relalg/structure_theory.hpp"

#include <algorithm>
#include <set>

#include "relalg/predicates.hpp"

namespace relalg {

bool BasePartition::is_point(Point x) const { return std::binary_search(points.begin(), points.end(), x); }

std::optional<std::size_t> BasePartition::twin_of(Point x) const {
  for (std::size_t i = 0; i < twins.size(); ++i)
    if (twins[i].first == x || twins[i].second == x) return i;
  return std::nullopt;
}

BasePartition derive_points_twins(const ConcreteAlgebra& c) {
  check_concrete_algebra(c);
  BasePartition bp{c.base_size, {}, {}};
  const ConcreteRelation id = ConcreteRelation::identity(c.base_size);
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    const ConcreteRelation& r = c.atoms[a];
    if (!r.is_subset_of(id)) continue;
    const auto diag = r.pairs();
    if (diag.size() == 1) {
      bp.points.push_back(diag[0].first);
    } else if (diag.size() == 2) {
      bp.twins.emplace_back(diag[0].first, diag[1].first);
    } else {
      throw StructureTheoryError("not pair-dense in the structural sense: identity atom " + c.names[a] + " = " +
                                 to_string(r) + " has " + std::to_string(diag.size()) + " diagonal pairs");
    }
  }
  std::sort(bp.points.begin(), bp.points.end());
  std::sort(bp.twins.begin(), bp.twins.end());
  return bp;
}

bool points_twins_match_inequalities(const ConcreteAlgebra& c, const BasePartition& bp) {
  const AtomStructure s = extract_atom_structure(c);
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    if (!s.is_identity_atom(static_cast<AtomId>(a))) continue;
    const Element x = s.atom(static_cast<AtomId>(a));
    const Point first = c.atoms[a].first_pair().first;
    if (bp.is_point(first) != is_point(x)) return false;
    if (bp.twin_of(first).has_value() != is_twin(x)) return false;
  }
  return true;
}

bool AtomClassification::related(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  if (i > j) std::swap(i, j);
  return std::find(tilde.begin(), tilde.end(), std::pair{i, j}) != tilde.end();
}

std::size_t AtomClassification::count(AtomType t) const {
  return static_cast<std::size_t>(
      std::count_if(atoms.begin(), atoms.end(), [&](const ClassifiedAtom& a) { return a.type == t; }));
}

namespace {

// A block of the base partition: either a point or a twin.
struct Block {
  bool twin = false;
  std::size_t twin_index = 0;
  std::vector<Point> members;

  bool operator==(const Block& o) const { return members == o.members; }
};

// The block whose members are exactly `coords`, if there is one.
std::optional<Block> as_block(const BasePartition& bp, const std::set<Point>& coords) {
  if (coords.size() == 1) {
    const Point x = *coords.begin();
    if (bp.is_point(x)) return Block{false, 0, {x}};
    return std::nullopt;
  }
  if (coords.size() == 2) {
    const Point x = *coords.begin();
    const Point y = *std::next(coords.begin());
    auto t = bp.twin_of(x);
    if (t && bp.twins[*t] == PointPair{x, y}) return Block{true, *t, {x, y}};
  }
  return std::nullopt;
}

std::optional<AtomType> shape_of(const ConcreteRelation& r, const Block& src, const Block& dst) {
  const std::size_t k = r.size();
  if (!src.twin && !dst.twin) return src == dst ? AtomType::kPoint : AtomType::kPointPoint;
  if (src.twin && dst.twin && src == dst) {
    // Within one twin {a,b} only the diagonal and the swap qualify.
    const Point a = src.members[0];
    const Point b = src.members[1];
    if (k == 2 && ((r.contains(a, a) && r.contains(b, b)) || (r.contains(a, b) && r.contains(b, a))))
      return AtomType::kTwin;
    return std::nullopt;
  }
  if (src.twin != dst.twin) return AtomType::kTwinPoint;  // sources and targets fix r = src x dst
  if (k == 2) return AtomType::kTwinTwinSplit;            // both coordinates cover their twins
  if (k == 4) return AtomType::kTwinTwinFull;
  return std::nullopt;
}

}  // namespace

AtomClassification classify_atoms(const ConcreteAlgebra& c, const BasePartition& bp) {
  AtomClassification out;
  std::set<std::pair<std::size_t, std::size_t>> split;
  std::set<std::pair<std::size_t, std::size_t>> full;
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    const ConcreteRelation& r = c.atoms[a];
    std::set<Point> sources;
    std::set<Point> targets;
    for (auto [x, y] : r.pairs()) {
      sources.insert(x);
      targets.insert(y);
    }
    auto src = as_block(bp, sources);
    auto dst = as_block(bp, targets);
    std::optional<AtomType> type;
    if (src && dst) type = shape_of(r, *src, *dst);
    if (!type) throw StructureTheoryError("atom " + c.names[a] + " = " + to_string(r) + " matches no atom shape");

    ClassifiedAtom ca{*type, {src->members}};
    if (!(src == dst)) ca.blocks.push_back(dst->members);
    if (*type == AtomType::kTwinTwinSplit || *type == AtomType::kTwinTwinFull) {
      auto key = std::minmax(src->twin_index, dst->twin_index);
      (*type == AtomType::kTwinTwinSplit ? split : full).insert(key);
    }
    out.atoms.push_back(std::move(ca));
  }

  for (const auto& key : split) {
    if (full.contains(key))
      throw StructureTheoryError("twins " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                                 " carry both split and full atoms");
  }
  out.tilde.assign(split.begin(), split.end());

  const std::size_t t = bp.twins.size();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k)
        if (out.related(i, j) && out.related(j, k) && !out.related(i, k)) {
          auto name = [&](std::size_t x) {
            return "{" + std::to_string(bp.twins[x].first) + "," + std::to_string(bp.twins[x].second) + "}";
          };
          throw StructureTheoryError("~ is not transitive: " + name(i) + " ~ " + name(j) + " ~ " + name(k) + " but " +
                                     name(i) + " !~ " + name(k));
        }
  return out;
}

}  // namespace relalg
