#include "relalg/garra.hpp"

#include <algorithm>
#include <array>
#include <compare>

#include "relalg/predicates.hpp"
#include "relalg/text_format.hpp"

namespace relalg {

namespace {
constexpr std::size_t kMaxCycleIssues = 16;
}  // namespace

IsoWitness IsoWitness::inverse() const {
  std::vector<AtomId> inv(map.size());
  for (std::size_t a = 0; a < map.size(); ++a) inv[map[a]] = static_cast<AtomId>(a);
  return {target, source, std::move(inv)};
}

std::vector<std::string> check_iso_witness(const IsoWitness& w) {
  std::vector<std::string> issues;
  const AtomStructure& s = w.source;
  const AtomStructure& t = w.target;
  const std::size_t n = s.size();
  if (t.size() != n || w.map.size() != n) {
    issues.push_back("atom counts differ: source " + std::to_string(n) + ", target " + std::to_string(t.size()) +
                     ", map " + std::to_string(w.map.size()));
    return issues;
  }
  std::vector<bool> hit(n, false);
  for (AtomId a = 0; a < n; ++a) {
    const AtomId f = w.map[a];
    if (f >= n) {
      issues.push_back("map sends " + s.name(a) + " outside the target");
      return issues;
    }
    if (hit[f]) issues.push_back("map is not injective: " + t.name(f) + " is hit twice");
    hit[f] = true;
  }
  if (!issues.empty()) return issues;

  for (AtomId a = 0; a < n; ++a) {
    const AtomId f = w.map[a];
    if (s.is_identity_atom(a) != t.is_identity_atom(f))
      issues.push_back("identity mismatch: " + s.name(a) + " -> " + t.name(f));
    if (w.map[s.converse(a)] != t.converse(f))
      issues.push_back("converse mismatch: " + s.name(a) + " -> " + t.name(f) + " but converse " +
                       s.name(s.converse(a)) + " -> " + t.name(w.map[s.converse(a)]));
  }
  std::size_t mismatches = 0;
  for (AtomId x = 0; x < n; ++x)
    for (AtomId y = 0; y < n; ++y)
      for (AtomId z = 0; z < n; ++z)
        if (s.has_cycle(x, y, z) != t.has_cycle(w.map[x], w.map[y], w.map[z]) &&
            mismatches++ < kMaxCycleIssues)
          issues.push_back("cycle mismatch: (" + s.name(x) + ", " + s.name(y) + ", " + s.name(z) + ") is " +
                           (s.has_cycle(x, y, z) ? "" : "not ") + "a source cycle but its image (" +
                           t.name(w.map[x]) + ", " + t.name(w.map[y]) + ", " + t.name(w.map[z]) + ") is " +
                           (s.has_cycle(x, y, z) ? "not " : "") + "a target cycle");
  if (mismatches > kMaxCycleIssues)
    issues.push_back(std::to_string(mismatches - kMaxCycleIssues) + " further cycle mismatches");
  return issues;
}

namespace {

// Isomorphism-invariant data of an atom used to prune candidates.
using Signature = std::array<std::size_t, 12>;

Signature signature(const AtomStructure& s, AtomId a) {
  const AtomId c = s.converse(a);
  const Element x = s.atom(a);
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
  for (AtomId b = 0; b < s.size(); ++b) {
    out_degree += s.product(a, b).count();
    in_degree += s.product(b, a).count();
  }
  return {s.is_identity_atom(a) ? 1U : 0U,
          c == a ? 1U : 0U,
          is_point(x) ? 1U : 0U,
          is_pair(x) ? 1U : 0U,
          is_function(x) ? 1U : 0U,
          is_function(s.atom(c)) ? 1U : 0U,
          s.product(a, c).count(),
          s.product(c, a).count(),
          s.product(a, a).count(),
          s.has_cycle(a, a, a) ? 1U : 0U,
          out_degree,
          in_degree};
}

class IsoSearch {
 public:
  IsoSearch(const AtomStructure& a, const AtomStructure& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget), map_(a.size(), kUnset), used_(b.size(), false) {
    for (AtomId x = 0; x < a.size(); ++x) sig_a_.push_back(signature(a, x));
    for (AtomId x = 0; x < b.size(); ++x) sig_b_.push_back(signature(b, x));
    for (AtomId x = 0; x < a.size(); ++x)
      if (a.is_identity_atom(x)) order_.push_back(x);
    for (AtomId x = 0; x < a.size(); ++x)
      if (!a.is_identity_atom(x)) order_.push_back(x);
  }

  bool plausible() const {
    if (a_.size() != b_.size()) return false;
    if (a_.identity_atoms().count() != b_.identity_atoms().count()) return false;
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  std::optional<std::vector<AtomId>> run() {
    if (!plausible()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr AtomId kUnset = ~AtomId{0};

  bool extend(std::size_t pos) {
    while (pos < order_.size() && map_[order_[pos]] != kUnset) ++pos;
    if (pos == order_.size()) return true;
    const AtomId x = order_[pos];
    const AtomId xc = a_.converse(x);
    for (AtomId y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      const AtomId yc = b_.converse(y);
      if (xc != x && used_[yc]) continue;
      if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_);
      const std::size_t mark = assigned_.size();
      bind(x, y);
      if (xc != x) bind(xc, yc);
      bool ok = true;
      for (std::size_t i = mark; i < assigned_.size() && ok; ++i) ok = consistent(assigned_[i]);
      if (ok && extend(pos + 1)) return true;
      while (assigned_.size() > mark) {
        used_[map_[assigned_.back()]] = false;
        map_[assigned_.back()] = kUnset;
        assigned_.pop_back();
      }
    }
    return false;
  }

  void bind(AtomId x, AtomId y) {
    map_[x] = y;
    used_[y] = true;
    assigned_.push_back(x);
  }

  // Every cycle among assigned atoms that involves m is preserved.
  bool consistent(AtomId m) const {
    const AtomId fm = map_[m];
    for (AtomId u : assigned_) {
      const AtomId fu = map_[u];
      for (AtomId v : assigned_) {
        const AtomId fv = map_[v];
        if (a_.has_cycle(m, u, v) != b_.has_cycle(fm, fu, fv)) return false;
        if (a_.has_cycle(u, m, v) != b_.has_cycle(fu, fm, fv)) return false;
        if (a_.has_cycle(u, v, m) != b_.has_cycle(fu, fv, fm)) return false;
      }
    }
    return true;
  }

  const AtomStructure& a_;
  const AtomStructure& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<AtomId> order_;
  std::vector<AtomId> map_;
  std::vector<bool> used_;
  std::vector<AtomId> assigned_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const AtomStructure& a, const AtomStructure& b, std::uint64_t budget) {
  IsoSearch search(a, b, budget);
  auto map = search.run();
  if (!map) return std::nullopt;
  return IsoWitness{a, b, std::move(*map)};
}

std::optional<IsoWitness> check_action_represents(const AtomStructure& s, const GroupAction& a,
                                                  std::uint64_t budget) {
  const AtomStructure target = extract_atom_structure(rel_algebra(a));
  return find_isomorphism(s, target, budget);
}

std::string_view describe(Z2Condition c) {
  switch (c) {
    case Z2Condition::kSimple: return "simple";
    case Z2Condition::kPairDense: return "pair-dense";
    case Z2Condition::kAtomsFunctional: return "atom or converse is a function";
  }
  return "unknown";
}

Z2Decision decide_z2(const AtomStructure& s, std::uint64_t budget) {
  const ValidationReport report = validate_structure(s);
  if (!report.valid()) {
    const Violation& v = report.violations.front();
    throw InvalidStructure("not a relation algebra atom structure: " + std::string(to_string(v.kind)) + ": " +
                           v.witness);
  }

  const Z2Axioms axioms = check_z2_axioms(s);
  std::vector<Z2Rejection> failures;
  if (!axioms.simple) failures.push_back({Z2Condition::kSimple, *axioms.simple.witness});
  if (!axioms.pair_dense) failures.push_back({Z2Condition::kPairDense, *axioms.pair_dense.witness});
  if (!axioms.atoms_functional) failures.push_back({Z2Condition::kAtomsFunctional, *axioms.atoms_functional.witness});
  if (!failures.empty()) {
    // A non-functional atom is reported ahead of a failing identity atom.
    auto rank = [](Z2Condition c) { return c == Z2Condition::kPairDense ? 2 : c == Z2Condition::kSimple ? 0 : 1; };
    const Z2Rejection primary = *std::min_element(failures.begin(), failures.end(), [&](const auto& x, const auto& y) {
      return rank(x.failed) < rank(y.failed);
    });
    return {std::nullopt, primary, std::move(failures)};
  }

  // Each identity atom is a pair; points become fixed elements and twins
  // become swapped pairs.
  Permutation g;
  s.identity_atoms().for_each([&](std::size_t e) {
    const auto next = static_cast<Point>(g.size());
    if (is_point(s.atom(static_cast<AtomId>(e)))) {
      g.push_back(next);
    } else {
      g.push_back(next + 1);
      g.push_back(next);
    }
  });
  GroupAction action(g.size(), {g});
  ConcreteAlgebra algebra = rel_algebra(action);
  const AtomStructure target = extract_atom_structure(algebra);
  auto witness = find_isomorphism(s, target, budget);
  if (!witness)
    throw std::logic_error("internal error: no isomorphism onto the constructed Z2 action\n# input\n" +
                           format_atom_structure(s) + "# constructed\n" + format_atom_structure(target));
  return {Z2Acceptance{std::move(action), std::move(algebra), std::move(*witness)}, std::nullopt, {}};
}

bool rejection_confirmed(const AtomStructure& s, const Z2Rejection& r) {
  if (r.witness >= s.size()) return false;
  const Element w = s.atom(r.witness);
  switch (r.failed) {
    case Z2Condition::kSimple: return compose(compose(s.one(), w), s.one()) != s.one();
    case Z2Condition::kPairDense: return w.leq(s.identity()) && !is_pair(w);
    case Z2Condition::kAtomsFunctional: return !is_function(w) && !is_function(apply_converse(w));
  }
  return false;
}

VerificationReport verify_decision(const Z2Decision& d) {
  VerificationReport report;
  if (!d.acceptance) {
    report.issues.emplace_back("decision is not an acceptance");
    return report;
  }
  const Z2Acceptance& acc = *d.acceptance;
  const GroupAction& action = acc.action;
  if (action.order() > 2) report.issues.push_back("group order " + std::to_string(action.order()) + " exceeds 2");
  const Permutation id = identity_permutation(action.base_size());
  for (const auto& g : action.generators())
    if (compose_permutations(g, g) != id) report.issues.emplace_back("a generator is not an involution");

  if (rel_algebra(action) != acc.algebra)
    report.issues.emplace_back("concrete algebra differs from the compatible relations of the action");

  try {
    if (extract_atom_structure(acc.algebra) != acc.witness.target)
      report.issues.emplace_back("witness target is not the structure of the concrete algebra");
  } catch (const AlgebraError& e) {
    report.issues.push_back(std::string("concrete algebra is malformed: ") + e.what());
  }

  for (auto& issue : check_iso_witness(acc.witness)) report.issues.push_back(std::move(issue));
  return report;
}

}  // namespace relalg
