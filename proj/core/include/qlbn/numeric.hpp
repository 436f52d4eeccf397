#pragma once

#include <string>
#include <string_view>

namespace qlbn {

/// Parses a decimal literal with correct rounding to the nearest double.
/// Surrounding whitespace is allowed; anything else throws ParseError.
double parse_decimal(std::string_view text);

/// Shortest representation with 17 significant digits, for machine output.
std::string format_exact(double value);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals = 5);

std::string_view trim(std::string_view text);

}  // namespace qlbn
