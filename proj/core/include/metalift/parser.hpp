#pragma once

#include <string_view>

#include "metalift/expr.hpp"

namespace metalift {

/// Parses the expression DSL.
///
/// Grammar: variables x1..xn and y1..yn, integer literals (a/b is parsed as a
/// quotient and folded), operators + - * / ^ with precedence
/// ^ > unary minus > * / > + -, functions sqrt exp log sin cos, parentheses.
/// Exponents must fold to an integer constant.
///
/// Throws ParseError carrying the byte offset of the offending token.
Expr parse(std::string_view text, int n);

}  // namespace metalift
