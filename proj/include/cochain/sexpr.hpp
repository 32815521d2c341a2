#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cochain/expr.hpp"
#include "cochain/field.hpp"

namespace cochain {

// x0 .. x{dim-1}
std::vector<std::string> coordinate_names(std::size_t dim);

// Prefix s-expression grammar:
//   expr := number | name | '(' op expr* ')'
//   op   := + | - | * | / | ^ | sqrt | log | prim
// Numbers are integers, p/q or finite decimals; the exponent of ^ must be an
// integer literal. `names[i]` denotes coordinate i. When `time_alias` is set,
// "t" is accepted for coordinate 0. Throws ParseError with a byte offset.
Expr parse_sexpr(std::string_view text, std::span<const std::string> names,
                 bool time_alias = false);

// Parses over x0..x{dim-1} (t aliases x0 when dim == 4). The result uses the
// polynomial backend whenever the expression is a polynomial.
ScalarField parse_field(std::string_view text, std::size_t dim);

}  // namespace cochain
