#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgcy/poly.hpp"

namespace lgcy {

struct PolynomialSource {
  std::vector<std::string> names;
  std::string text;
  Polynomial poly;
};

// Grammar (whitespace is insignificant):
//   source ::= [ "vars:" name+ newline ] expr
//   expr   ::= ['+'|'-'] term (('+'|'-') term)*
//   term   ::= factor ('*' factor)*
//   factor ::= int ['/' int] | name ['^' nat]
// Without a header, variables are numbered in order of first appearance.
// Errors carry a 0-based offset into the full text.
PolynomialSource parse_polynomial(std::string_view text);

// Parses with a fixed variable list; unknown names are errors.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

std::string render(const PolynomialSource& src);

}  // namespace lgcy
