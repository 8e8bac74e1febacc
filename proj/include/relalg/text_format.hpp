#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "relalg/atom_structure.hpp"
#include "relalg/concrete.hpp"
#include "relalg/group_action.hpp"

namespace relalg {

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace.
//
//   atom structure        concrete algebra               group action
//   atoms 1' r r~         set 3                          set 3
//   identity 1'           atom e0 = (0,0) (1,1) (2,2)    gen 1 2 0
//   converse 1':1' r:r~   atom a1 = (0,1) (1,2) (2,0)
//   cycle r r r~          ...
//
// Cycles may be listed up to Peircean rotation; the reader closes them.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::string token, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string token_;
};

/// `source` is used in error messages only.
AtomStructure parse_atom_structure(std::istream& in, const std::string& source = "<input>");
ConcreteAlgebra parse_concrete_algebra(std::istream& in, const std::string& source = "<input>");
GroupAction parse_group_action(std::istream& in, const std::string& source = "<input>",
                               std::size_t max_order = kDefaultMaxGroupOrder);

AtomStructure parse_atom_structure_text(std::string_view text);
ConcreteAlgebra parse_concrete_algebra_text(std::string_view text);
GroupAction parse_group_action_text(std::string_view text);

/// Load a file; throws ParseError (line 0) when it cannot be opened.
AtomStructure load_atom_structure(const std::string& path);
ConcreteAlgebra load_concrete_algebra(const std::string& path);
GroupAction load_group_action(const std::string& path, std::size_t max_order = kDefaultMaxGroupOrder);

/// Writes one representative per rotation class of cycles (the least
/// triple by atom id), so the output re-reads to the same structure.
void write_atom_structure(std::ostream& out, const AtomStructure& s);
void write_concrete_algebra(std::ostream& out, const ConcreteAlgebra& c);
void write_group_action(std::ostream& out, const GroupAction& a);

std::string format_atom_structure(const AtomStructure& s);
std::string format_concrete_algebra(const ConcreteAlgebra& c);
std::string format_group_action(const GroupAction& a);

}  // namespace relalg
