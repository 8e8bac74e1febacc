#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace relalg;
using namespace relalg::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "relalg_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

bool has(const std::string& text, const std::string& what) { return text.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", data_path("2_3.ra")});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "valid: 3 atoms\n");

  const std::string broken =
      write_file("broken.ra", "atoms 1' p q\nidentity 1'\nconverse 1':1' p:q\ncycle 1' 1' 1'\n");
  r = run({"validate", broken});
  CHECK(r.code == cli::kExitNo);
  CHECK(has(r.out, "invalid:"));
  CHECK(has(r.out, "violation missing-domain-atom: p has 0"));
}

TEST_CASE("rel on the Z3 self-action") {
  const auto r = run({"rel", data_path("z3_self.act")});
  CHECK(r.code == cli::kExitYes);
  CHECK(has(r.out, "# group order 3, 3 atoms"));
  CHECK(has(r.out, "atom e0 = (0,0) (1,1) (2,2)"));
  CHECK(has(r.out, "atom a1 = (0,1) (1,2) (2,0)"));
  CHECK(has(r.out, "atom a2 = (0,2) (1,0) (2,1)"));

  // The atom structure section reads back as a valid structure.
  const auto pos = r.out.find("# atom structure\n");
  REQUIRE(pos != std::string::npos);
  const AtomStructure s = parse_atom_structure_text(r.out.substr(pos));
  CHECK(validate_structure(s).valid());
}

TEST_CASE("decide-z2 verdicts") {
  auto r = run({"decide-z2", data_path("5_7.ra")});
  CHECK(r.code == cli::kExitNo);
  CHECK(has(r.out, "verdict rejected"));
  CHECK(has(r.out, "axiom 3 fails at atom a"));
  CHECK(has(r.out, "axiom 2 also fails at atom 1' (pair-dense)"));

  r = run({"decide-z2", data_path("2_3.ra")});
  CHECK(r.code == cli::kExitNo);
  CHECK(has(r.out, "axiom 2 fails at atom 1'"));

  r = run({"decide-z2", "--verify", data_path("z2_swap.ra")});
  CHECK(r.code == cli::kExitYes);
  CHECK(has(r.out, "verdict accepted"));
  CHECK(has(r.out, "# verified"));
  CHECK(has(r.out, "gen 1 0"));
  CHECK(has(r.out, "map 1' -> e0"));
}

TEST_CASE("iso and check-action") {
  const std::string relabelled = write_file(
      "2_3_relabelled.ra", "atoms s~ s id\nidentity id\nconverse id:id s:s~\ncycle s s s~\ncycle id id id\n"
                           "cycle id s s\ncycle id s~ s~\n");
  auto r = run({"iso", data_path("2_3.ra"), relabelled});
  CHECK(r.code == cli::kExitYes);
  CHECK(has(r.out, "map 1' -> id"));

  r = run({"iso", data_path("2_3.ra"), data_path("5_7.ra")});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out == "none\n");

  r = run({"check-action", data_path("5_7.ra"), data_path("d5.act")});
  CHECK(r.code == cli::kExitYes);
  r = run({"check-action", data_path("5_7.ra"), data_path("z3_self.act")});
  CHECK(r.code == cli::kExitNo);
}

TEST_CASE("classify and axioms") {
  auto r = run({"classify", data_path("two_twins_unrelated.rel")});
  CHECK(r.code == cli::kExitYes);
  CHECK(has(r.out, "twins {0,1} {2,3}"));
  CHECK(has(r.out, "atom x type 6 {0,1} {2,3}"));
  CHECK_FALSE(has(r.out, "tilde"));

  const std::string z3rel = write_file("z3.rel", "set 3\natom e = (0,0) (1,1) (2,2)\natom r = (0,1) (1,2) (2,0)\n"
                                                  "atom s = (0,2) (1,0) (2,1)\n");
  r = run({"classify", z3rel});
  CHECK(r.code == cli::kExitNo);
  CHECK(has(r.out, "unclassifiable"));

  r = run({"axioms", data_path("z2_swap.ra")});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out ==
        "axiom 1 (simple): holds\naxiom 2 (pair-dense): holds\naxiom 3 (atom or converse is a function): holds\n");
  r = run({"axioms", data_path("5_7.ra")});
  CHECK(r.code == cli::kExitNo);
  CHECK(has(r.out, "axiom 3 (atom or converse is a function): fails at atom a"));
}

TEST_CASE("errors") {
  auto r = run({"validate", "/nonexistent.ra"});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.err, "/nonexistent.ra:0:"));

  const std::string bad = write_file("bad.ra", "atoms 1' r\nidentity 1'\nconverse 1':1' r:x\n");
  r = run({"validate", bad});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.err, ":3:"));
  CHECK(has(r.err, "'x'"));

  const std::string broken = write_file("broken2.ra", "atoms 1' r\nidentity 1'\nconverse 1':1' r:r\ncycle 1' 1' 1'\n");
  r = run({"decide-z2", broken});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.err, "not a relation algebra atom structure"));

  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  CHECK(run({"iso", data_path("2_3.ra")}).code == cli::kExitError);
  CHECK(run({"--help"}).code == cli::kExitYes);
}

TEST_CASE("--output and determinism") {
  const auto path = scratch("rel_out.txt").string();
  std::filesystem::remove(path);
  const auto r = run({"rel", "-o", path, data_path("d5.act")});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(written.str() == run({"rel", data_path("d5.act")}).out);
  CHECK(run({"decide-z2", data_path("z2_swap.ra")}).out == run({"decide-z2", data_path("z2_swap.ra")}).out);
}
