#pragma once

#include <string>

#include "diffext/types.hpp"

namespace diffext {

// Grammar: sums/products/quotients of integers, variables t1..t<nvars>, and
// parenthesized subexpressions, with ^ for nonnegative integer powers and
// unary minus. Throws ParseError on malformed input.
RatFuncQ parse_ratfunc(const std::string& text, int nvars);

// Either a formal-partial alias "p<k>" (1-based), or a comma-separated list
// of nvars rational-function coefficients, one per variable.
DerivationQ parse_derivation(const std::string& spec, int nvars);

}  // namespace diffext
