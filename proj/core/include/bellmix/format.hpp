#pragma once

#include <string>
#include <string_view>

namespace bellmix {

/// Shortest decimal form that round-trips to the same double
/// (std::to_chars); used for all CSV and JSON numeric output so
/// repeated runs diff byte-identically.
std::string format_double(double v);

/// Strict double parse of the whole string; throws ParseError.
double parse_double(std::string_view s);

/// Strict unsigned integer parse; throws ParseError.
unsigned long long parse_u64(std::string_view s);

} // namespace bellmix
