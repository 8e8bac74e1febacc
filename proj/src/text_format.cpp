#include "relalg/text_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace relalg {

ParseError::ParseError(std::string source, std::size_t line, std::string token, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message +
                         (token.empty() ? std::string() : " (at '" + token + "')")),
      source_(std::move(source)),
      line_(line),
      token_(std::move(token)) {}

namespace {

// One non-blank line with its comment stripped, split into tokens.
struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<std::string> tokens;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, raw, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

// Parses the `set <n>` header shared by the concrete and action formats.
std::size_t parse_set_line(const Line& line, const std::string& source) {
  if (line.tokens[0] != "set") throw ParseError(source, line.number, line.tokens[0], "expected 'set <n>' first");
  if (line.tokens.size() != 2) throw ParseError(source, line.number, "", "'set' takes exactly one number");
  auto n = to_number(line.tokens[1]);
  if (!n || *n == 0) throw ParseError(source, line.number, line.tokens[1], "base size must be a positive integer");
  return *n;
}

template <typename T>
T load_file(const std::string& path, T (*parse)(std::istream&, const std::string&)) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "", "cannot open file");
  return parse(in, path);
}

bool is_rotation_closed(const AtomStructure& s) {
  const auto cycles = s.cycles();
  return close_under_rotation(cycles, s.converse_map()).size() == cycles.size();
}

// All six Peircean transforms of a cycle.
std::array<Cycle, 6> rotations(const AtomStructure& s, const Cycle& c) {
  auto cv = [&](AtomId a) { return s.converse(a); };
  return {Cycle{c.x, c.y, c.z},        Cycle{cv(c.x), c.z, c.y},     Cycle{c.z, cv(c.y), c.x},
          Cycle{cv(c.y), cv(c.x), cv(c.z)}, Cycle{c.y, cv(c.z), cv(c.x)}, Cycle{cv(c.z), c.x, cv(c.y)}};
}

}  // namespace

AtomStructure parse_atom_structure(std::istream& in, const std::string& source) {
  const auto lines = read_lines(in);
  std::optional<std::vector<std::string>> names;
  std::map<std::string, AtomId, std::less<>> ids;
  std::optional<std::vector<AtomId>> identity;
  std::vector<std::optional<AtomId>> converse;
  std::vector<Cycle> cycles;

  auto lookup = [&](const Line& line, const std::string& tok) {
    auto it = ids.find(tok);
    if (it == ids.end()) throw ParseError(source, line.number, tok, "unknown atom");
    return it->second;
  };

  for (const Line& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "atoms") {
      if (names) throw ParseError(source, line.number, kw, "duplicate 'atoms' line");
      names.emplace(line.tokens.begin() + 1, line.tokens.end());
      if (names->empty()) throw ParseError(source, line.number, kw, "degenerate structure: no atoms");
      for (std::size_t i = 0; i < names->size(); ++i) {
        const std::string& nm = (*names)[i];
        if (nm.find(':') != std::string::npos) throw ParseError(source, line.number, nm, "atom names cannot contain ':'");
        ids.emplace(nm, static_cast<AtomId>(i));  // first occurrence wins; validation flags duplicates
      }
      converse.assign(names->size(), std::nullopt);
      continue;
    }
    if (!names) throw ParseError(source, line.number, kw, "'atoms' must come first");
    if (kw == "identity") {
      if (identity) throw ParseError(source, line.number, kw, "duplicate 'identity' line");
      if (line.tokens.size() < 2) throw ParseError(source, line.number, kw, "identity list is empty");
      identity.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) identity->push_back(lookup(line, line.tokens[i]));
    } else if (kw == "converse") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::string& tok = line.tokens[i];
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError(source, line.number, tok, "expected <atom>:<atom>");
        const AtomId a = lookup(line, tok.substr(0, colon));
        const AtomId b = lookup(line, tok.substr(colon + 1));
        if (converse[a] || converse[b])
          throw ParseError(source, line.number, tok, "atom already has a converse");
        converse[a] = b;
        converse[b] = a;
      }
    } else if (kw == "cycle") {
      if (line.tokens.size() != 4) throw ParseError(source, line.number, kw, "'cycle' takes exactly three atoms");
      cycles.push_back({lookup(line, line.tokens[1]), lookup(line, line.tokens[2]), lookup(line, line.tokens[3])});
    } else {
      throw ParseError(source, line.number, kw, "unknown keyword");
    }
  }

  const std::size_t last = lines.empty() ? 0 : lines.back().number;
  if (!names) throw ParseError(source, last, "", "missing 'atoms' line");
  if (!identity) throw ParseError(source, last, "", "missing 'identity' line");
  std::vector<AtomId> conv(names->size());
  for (std::size_t a = 0; a < names->size(); ++a) {
    if (!converse[a]) throw ParseError(source, last, (*names)[a], "atom has no converse entry");
    conv[a] = *converse[a];
  }
  auto closed = close_under_rotation(cycles, conv);
  return AtomStructure(std::move(*names), std::move(conv), *identity, closed);
}

ConcreteAlgebra parse_concrete_algebra(std::istream& in, const std::string& source) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(source, 0, "", "empty input");
  ConcreteAlgebra c;
  c.base_size = parse_set_line(lines[0], source);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "atom") throw ParseError(source, line.number, line.tokens[0], "expected 'atom'");
    if (line.tokens.size() < 3 || line.tokens[2] != "=")
      throw ParseError(source, line.number, "", "expected 'atom <name> = (i,j) ...'");
    const std::string& name = line.tokens[1];
    // Pairs may contain blanks, so scan the raw text after '='.
    const std::string rest = line.text.substr(line.text.find('=') + 1);
    ConcreteRelation rel(c.base_size);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    };
    auto read_coord = [&]() -> Point {
      skip_ws();
      const std::size_t start = pos;
      while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
      const std::string tok = rest.substr(start, pos - start);
      auto v = to_number(tok);
      if (!v) throw ParseError(source, line.number, rest.substr(start, 8), "expected a base element");
      if (*v >= c.base_size) throw ParseError(source, line.number, tok, "base element out of range");
      return static_cast<Point>(*v);
    };
    auto expect = [&](char ch) {
      skip_ws();
      if (pos >= rest.size() || rest[pos] != ch)
        throw ParseError(source, line.number, rest.substr(pos, 8), std::string("expected '") + ch + "'");
      ++pos;
    };
    for (skip_ws(); pos < rest.size(); skip_ws()) {
      expect('(');
      const Point x = read_coord();
      expect(',');
      const Point y = read_coord();
      expect(')');
      rel.insert(x, y);
    }
    if (rel.empty()) throw ParseError(source, line.number, name, "atom has no pairs");
    c.names.push_back(name);
    c.atoms.push_back(std::move(rel));
  }
  return c;
}

GroupAction parse_group_action(std::istream& in, const std::string& source, std::size_t max_order) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(source, 0, "", "empty input");
  const std::size_t n = parse_set_line(lines[0], source);
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "gen") throw ParseError(source, line.number, line.tokens[0], "expected 'gen'");
    if (line.tokens.size() != n + 1)
      throw ParseError(source, line.number, "",
                       "generator needs " + std::to_string(n) + " images, got " + std::to_string(line.tokens.size() - 1));
    Permutation p;
    std::vector<bool> hit(n, false);
    for (std::size_t k = 1; k <= n; ++k) {
      auto v = to_number(line.tokens[k]);
      if (!v || *v >= n) throw ParseError(source, line.number, line.tokens[k], "image out of range");
      if (hit[*v]) throw ParseError(source, line.number, line.tokens[k], "repeated image: not a bijection");
      hit[*v] = true;
      p.push_back(static_cast<Point>(*v));
    }
    gens.push_back(std::move(p));
  }
  return GroupAction(n, std::move(gens), max_order);
}

AtomStructure parse_atom_structure_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_atom_structure(in);
}

ConcreteAlgebra parse_concrete_algebra_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_concrete_algebra(in);
}

GroupAction parse_group_action_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_group_action(in);
}

AtomStructure load_atom_structure(const std::string& path) {
  return load_file<AtomStructure>(path, [](std::istream& in, const std::string& src) {
    return parse_atom_structure(in, src);
  });
}

ConcreteAlgebra load_concrete_algebra(const std::string& path) {
  return load_file<ConcreteAlgebra>(path, [](std::istream& in, const std::string& src) {
    return parse_concrete_algebra(in, src);
  });
}

GroupAction load_group_action(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "", "cannot open file");
  return parse_group_action(in, path, max_order);
}

void write_atom_structure(std::ostream& out, const AtomStructure& s) {
  out << "atoms";
  for (const auto& nm : s.names()) out << ' ' << nm;
  out << "\nidentity";
  s.identity_atoms().for_each([&](std::size_t e) { out << ' ' << s.name(static_cast<AtomId>(e)); });
  out << "\nconverse";
  for (AtomId a = 0; a < s.size(); ++a)
    if (s.converse(a) >= a) out << ' ' << s.name(a) << ':' << s.name(s.converse(a));
  out << '\n';
  const bool closed = is_rotation_closed(s);
  for (const Cycle& c : s.cycles()) {
    if (closed) {
      const auto rot = rotations(s, c);
      if (*std::min_element(rot.begin(), rot.end()) != c) continue;
    }
    out << "cycle " << s.name(c.x) << ' ' << s.name(c.y) << ' ' << s.name(c.z) << '\n';
  }
}

void write_concrete_algebra(std::ostream& out, const ConcreteAlgebra& c) {
  out << "set " << c.base_size << '\n';
  for (std::size_t a = 0; a < c.atoms.size(); ++a) {
    out << "atom " << c.names[a] << " =";
    for (auto [x, y] : c.atoms[a].pairs()) out << " (" << x << ',' << y << ')';
    out << '\n';
  }
}

void write_group_action(std::ostream& out, const GroupAction& a) {
  out << "set " << a.base_size() << '\n';
  for (const auto& g : a.generators()) {
    out << "gen";
    for (Point x : g) out << ' ' << x;
    out << '\n';
  }
}

std::string format_atom_structure(const AtomStructure& s) {
  std::ostringstream out;
  write_atom_structure(out, s);
  return out.str();
}

std::string format_concrete_algebra(const ConcreteAlgebra& c) {
  std::ostringstream out;
  write_concrete_algebra(out, c);
  return out.str();
}

std::string format_group_action(const GroupAction& a) {
  std::ostringstream out;
  write_group_action(out, a);
  return out.str();
}

}  // namespace relalg
