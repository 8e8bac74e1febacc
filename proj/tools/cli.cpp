#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "relalg/atom_structure.hpp"
#include "relalg/garra.hpp"
#include "relalg/predicates.hpp"
#include "relalg/structure_theory.hpp"
#include "relalg/text_format.hpp"

namespace relalg::cli {

namespace {

// Thrown for inputs that parse but are unusable (e.g. an invalid structure
// given to a command that needs a valid one).
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_valid(const AtomStructure& s, const std::string& path) {
  const ValidationReport report = validate_structure(s);
  if (!report.valid()) {
    const Violation& v = report.violations.front();
    throw UsageFailure(path + ": not a relation algebra atom structure: " + std::string(to_string(v.kind)) + ": " +
                       v.witness);
  }
}

AtomStructure load_valid_structure(const std::string& path) {
  AtomStructure s = load_atom_structure(path);
  require_valid(s, path);
  return s;
}

void write_witness(std::ostream& out, const IsoWitness& w) {
  for (AtomId a = 0; a < w.source.size(); ++a)
    out << "map " << w.source.name(a) << " -> " << w.target.name(w.map[a]) << '\n';
}

std::string block_text(const std::vector<Point>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i]);
  return s + "}";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const AtomStructure s = load_atom_structure(path);
  const ValidationReport report = validate_structure(s);
  if (report.valid()) {
    out << "valid: " << s.size() << " atoms\n";
    return kExitYes;
  }
  out << "invalid: " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) out << "violation " << to_string(v.kind) << ": " << v.witness << '\n';
  return kExitNo;
}

int cmd_rel(const std::string& path, std::size_t max_order, std::ostream& out) {
  const GroupAction action = load_group_action(path, max_order);
  const ConcreteAlgebra c = rel_algebra(action);
  const AtomStructure s = extract_atom_structure(c);
  out << "# group order " << action.order() << ", " << c.atoms.size() << " atoms\n";
  out << "# concrete algebra\n";
  write_concrete_algebra(out, c);
  out << "# atom structure\n";
  write_atom_structure(out, s);
  return kExitYes;
}

int cmd_decide(const std::string& path, bool verify, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  const AtomStructure s = load_valid_structure(path);
  const Z2Decision d = decide_z2(s, budget);
  if (!d.accepted()) {
    const Z2Rejection& r = *d.rejection;
    out << "verdict rejected\n";
    out << "axiom " << static_cast<int>(r.failed) << " fails at atom " << s.name(r.witness) << " ("
        << describe(r.failed) << ")\n";
    for (const Z2Rejection& other : d.failures)
      if (other.failed != r.failed)
        out << "axiom " << static_cast<int>(other.failed) << " also fails at atom " << s.name(other.witness) << " ("
            << describe(other.failed) << ")\n";
    return kExitNo;
  }
  if (verify) {
    const VerificationReport v = verify_decision(d);
    if (!v.ok()) {
      err << "verification failed:\n";
      for (const auto& issue : v.issues) err << "  " << issue << '\n';
      return kExitError;
    }
  }
  const Z2Acceptance& acc = *d.acceptance;
  out << "verdict accepted\n";
  if (verify) out << "# verified\n";
  out << "# action\n";
  write_group_action(out, acc.action);
  out << "# concrete algebra\n";
  write_concrete_algebra(out, acc.algebra);
  out << "# isomorphism\n";
  write_witness(out, acc.witness);
  return kExitYes;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, std::uint64_t budget, std::ostream& out) {
  const AtomStructure a = load_atom_structure(a_path);
  const AtomStructure b = load_atom_structure(b_path);
  require_valid(a, a_path);
  require_valid(b, b_path);
  const auto w = find_isomorphism(a, b, budget);
  if (!w) {
    out << "none\n";
    return kExitNo;
  }
  write_witness(out, *w);
  return kExitYes;
}

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err) {
  const ConcreteAlgebra c = load_concrete_algebra(path);
  BasePartition bp;
  AtomClassification cls;
  try {
    bp = derive_points_twins(c);
    cls = classify_atoms(c, bp);
  } catch (const StructureTheoryError& e) {
    out << "unclassifiable: " << e.what() << '\n';
    return kExitNo;
  }
  out << "points";
  for (Point p : bp.points) out << " {" << p << '}';
  out << "\ntwins";
  for (auto [x, y] : bp.twins) out << " {" << x << ',' << y << '}';
  out << '\n';
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    out << "atom " << c.names[a] << " type " << static_cast<int>(cls.atoms[a].type);
    for (const auto& block : cls.atoms[a].blocks) out << ' ' << block_text(block);
    out << '\n';
  }
  for (auto [i, j] : cls.tilde)
    out << "tilde: " << block_text({bp.twins[i].first, bp.twins[i].second}) << " ~ "
        << block_text({bp.twins[j].first, bp.twins[j].second}) << '\n';
  if (!points_twins_match_inequalities(c, bp)) {
    err << "internal error: point/twin cardinalities disagree with the point and pair inequalities\n";
    return kExitError;
  }
  return kExitYes;
}

int cmd_check_action(const std::string& ra_path, const std::string& act_path, std::size_t max_order,
                     std::uint64_t budget, std::ostream& out) {
  const AtomStructure s = load_atom_structure(ra_path);
  const GroupAction action = load_group_action(act_path, max_order);
  require_valid(s, ra_path);
  const auto w = check_action_represents(s, action, budget);
  if (!w) {
    out << "none\n";
    return kExitNo;
  }
  write_witness(out, *w);
  return kExitYes;
}

int cmd_axioms(const std::string& path, std::ostream& out) {
  const AtomStructure s = load_valid_structure(path);
  const Z2Axioms ax = check_z2_axioms(s);
  auto line = [&](int k, std::string_view what, const AtomCheck& c) {
    out << "axiom " << k << " (" << what << "): ";
    if (c.holds)
      out << "holds\n";
    else
      out << "fails at atom " << s.name(*c.witness) << '\n';
  };
  line(1, describe(Z2Condition::kSimple), ax.simple);
  line(2, describe(Z2Condition::kPairDense), ax.pair_dense);
  line(3, describe(Z2Condition::kAtomsFunctional), ax.atoms_functional);
  return ax.all() ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite relation algebras and group-action representations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t max_order = kDefaultMaxGroupOrder;
  bool verify = false;
  std::array<std::string, 2> files;
  app.add_option("--output,-o", output, "Write the report to this file instead of standard output");

  std::function<int(std::ostream&)> command;
  auto file = [&](CLI::App* sub, const char* name, std::size_t index, const char* help) {
    sub->add_option(name, files[index], help)->required();
  };
  auto with_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Node limit for the isomorphism search");
  };
  auto with_max_order = [&](CLI::App* sub) {
    sub->add_option("--max-order", max_order, "Largest group order to materialise");
  };

  auto* validate = app.add_subcommand("validate", "Check the relation algebra axioms of an atom structure");
  file(validate, "ra-file", 0, "Atom structure file");
  validate->callback([&] { command = [&](std::ostream& o) { return cmd_validate(files[0], o); }; });

  auto* rel = app.add_subcommand("rel", "Compatible relations of a group action");
  file(rel, "action-file", 0, "Group action file");
  with_max_order(rel);
  rel->callback([&] { command = [&](std::ostream& o) { return cmd_rel(files[0], max_order, o); }; });

  auto* decide = app.add_subcommand("decide-z2", "Decide representability by a two-element group action");
  file(decide, "ra-file", 0, "Atom structure file");
  decide->add_flag("--verify", verify, "Re-check an acceptance before reporting it");
  with_budget(decide);
  decide->callback([&] { command = [&](std::ostream& o) { return cmd_decide(files[0], verify, budget, o, err); }; });

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two atom structures");
  file(iso, "ra-file", 0, "Source atom structure");
  file(iso, "ra-file2", 1, "Target atom structure");
  with_budget(iso);
  iso->callback([&] { command = [&](std::ostream& o) { return cmd_iso(files[0], files[1], budget, o); }; });

  auto* classify = app.add_subcommand("classify", "Points, twins and atom types of a concrete algebra");
  file(classify, "concrete-file", 0, "Concrete algebra file");
  classify->callback([&] { command = [&](std::ostream& o) { return cmd_classify(files[0], o, err); }; });

  auto* check = app.add_subcommand("check-action", "Does a group action represent an atom structure?");
  file(check, "ra-file", 0, "Atom structure file");
  file(check, "action-file", 1, "Group action file");
  with_budget(check);
  with_max_order(check);
  check->callback(
      [&] { command = [&](std::ostream& o) { return cmd_check_action(files[0], files[1], max_order, budget, o); }; });

  auto* axioms = app.add_subcommand("axioms", "Evaluate the three Z2 axioms");
  file(axioms, "ra-file", 0, "Atom structure file");
  axioms->callback([&] { command = [&](std::ostream& o) { return cmd_axioms(files[0], o); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    std::ostringstream report;
    const int code = command(report);
    if (output.empty()) {
      out << report.str();
    } else {
      std::ofstream file_out(output);
      if (!file_out) {
        err << "error: cannot write " << output << '\n';
        return kExitError;
      }
      file_out << report.str();
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace relalg::cli
