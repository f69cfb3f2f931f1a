#pragma once

#include <stdexcept>
#include <string_view>

#include "nilzeta/rational_function.hpp"

namespace nilzeta {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Readers for the text produced by LaurentPolynomial::to_string and
// FactoredRationalFunction::to_string. The grammar is in docs/rendering.ebnf.
// Whitespace between tokens is ignored.

LaurentPolynomial parse_polynomial(std::string_view text);
FactoredRationalFunction parse_rational(std::string_view text);

}  // namespace nilzeta
