#include <random>
#include <sstream>

#include "doctest.h"
#include "relalg/text_format.hpp"
#include "test_support.hpp"

using namespace relalg;
using namespace relalg::testing;

namespace {

template <typename F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError("", 0, "", "");
}

}  // namespace

TEST_CASE("atom structure text") {
  const AtomStructure s = parse_atom_structure_text(
      "# 2_3\n"
      "atoms 1' r r~\n"
      "identity 1'\n"
      "converse 1':1' r:r~\n"
      "cycle 1' 1' 1'\n"
      "cycle 1' r r\n"
      "cycle 1' r~ r~\n"
      "cycle r r r~   # r;r = r~\n");
  CHECK(s == load_ra("2_3.ra"));
  CHECK(s.cycles().size() == 9);
  CHECK(validate_structure(s).valid());
}

TEST_CASE("atom structure parse errors name the line and token") {
  auto e = parse_error([] { parse_atom_structure_text("atoms 1' r r~\nidentity 1'\nconverse 1':1' r:q\n"); });
  CHECK(e.line() == 3);
  CHECK(e.token() == "q");

  e = parse_error([] { parse_atom_structure_text("atoms 1' r\nidentity 1'\nconverse 1':1' r:r\ncycle r r s\n"); });
  CHECK(e.line() == 4);
  CHECK(e.token() == "s");

  e = parse_error([] { parse_atom_structure_text("identity 1'\n"); });
  CHECK(e.line() == 1);

  e = parse_error([] { parse_atom_structure_text("atoms\n"); });
  CHECK(std::string(e.what()).find("degenerate") != std::string::npos);

  e = parse_error([] { parse_atom_structure_text("atoms 1' r\nidentity 1'\nconverse 1':1' r:r r:r\n"); });
  CHECK(e.line() == 3);

  e = parse_error([] { parse_atom_structure_text("atoms 1' r\nidentity 1'\nconverse 1':1' r:r\ncycle r r\n"); });
  CHECK(e.line() == 4);

  e = parse_error([] { parse_atom_structure_text("atoms 1' r\nconverse 1':1' r:r\nbogus\n"); });
  CHECK(e.line() == 3);
  CHECK(e.token() == "bogus");

  e = parse_error([] { load_atom_structure("/nonexistent/file.ra"); });
  CHECK(e.line() == 0);
  CHECK(e.source() == "/nonexistent/file.ra");
  CHECK(std::string(e.what()).find("/nonexistent/file.ra:0:") == 0);
}

TEST_CASE("concrete algebra text") {
  const ConcreteAlgebra c = load_concrete_algebra(data_path("two_twins_unrelated.rel"));
  CHECK(c.base_size == 4);
  CHECK(c.names.size() == 6);
  CHECK(c.atoms[4] == ConcreteRelation(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  auto e = parse_error([] { parse_concrete_algebra_text("set 2\natom e = (0,0) (1,1)\natom s = (0,1) (1,7)\n"); });
  CHECK(e.line() == 3);
  e = parse_error([] { parse_concrete_algebra_text("atom e = (0,0)\n"); });
  CHECK(e.line() == 1);
  e = parse_error([] { parse_concrete_algebra_text("set 2\natom e (0,0)\n"); });
  CHECK(e.line() == 2);
}

TEST_CASE("group action text") {
  const GroupAction d5 = load_act("d5.act");
  CHECK(d5.generators() == std::vector<Permutation>{{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
  CHECK(parse_group_action_text("set 3\n").order() == 1);

  auto e = parse_error([] { parse_group_action_text("set 3\ngen 0 1\n"); });
  CHECK(e.line() == 2);
  e = parse_error([] { parse_group_action_text("set 3\ngen 0 1 1\n"); });
  CHECK(e.line() == 2);
  CHECK(e.token() == "1");
  e = parse_error([] { parse_group_action_text("set 3\ngen 0 1 3\n"); });
  CHECK(e.token() == "3");
  e = parse_error([] { parse_group_action_text("set x\n"); });
  CHECK(e.token() == "x");
}

TEST_CASE("writers round-trip") {
  std::mt19937 rng(41);
  std::vector<AtomStructure> structures{load_ra("2_3.ra"), load_ra("5_7.ra"), load_ra("z2_swap.ra"), full_structure(3)};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const GroupAction a(n, {random_cyclic_generator(rng, trial % 2 ? 2 : 3, n)});
    CHECK(parse_group_action_text(format_group_action(a)).generators() == a.generators());
    const ConcreteAlgebra c = rel_algebra(a);
    CHECK(parse_concrete_algebra_text(format_concrete_algebra(c)) == c);
    structures.push_back(extract_atom_structure(c));
  }
  for (const auto& s : structures) {
    const AtomStructure back = parse_atom_structure_text(format_atom_structure(s));
    CHECK(back == s);
    CHECK(validate_structure(back).valid());
  }
}

TEST_CASE("a structure without rotation closure is written in full") {
  const AtomStructure raw({"1'", "r", "r~"}, {0, 2, 1}, std::vector<AtomId>{0},
                          std::vector<Cycle>{{0, 0, 0}, {0, 1, 1}, {1, 1, 2}});
  const std::string text = format_atom_structure(raw);
  CHECK(text.find("cycle 1' r r") != std::string::npos);
  CHECK(text.find("cycle r r r~") != std::string::npos);
}
