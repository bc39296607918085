#pragma once

#include <string_view>

namespace slowspin::cli {

/// Evaluates a numeric flag value such as "sqrt(10)*pi", "5*pi/2", "1e-3".
/// Supports + - * / ^, parentheses, unary minus, the constant pi and the
/// functions sqrt, sin, cos, exp, log. Throws InvalidArgument on bad input.
double eval_expression(std::string_view text);

}  // namespace slowspin::cli
