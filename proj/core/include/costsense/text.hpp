#pragma once

// Locale-independent number formatting and parsing.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace costsense::text {

// Shortest decimal that parses back to the same double.
std::string format_double(double value);
// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

// Whole-string parses; throw std::invalid_argument naming `what` on failure.
double parse_double(std::string_view s, std::string_view what = "number");
std::int64_t parse_int(std::string_view s, std::string_view what = "integer");
std::uint64_t parse_uint(std::string_view s, std::string_view what = "integer");
bool parse_bool(std::string_view s, std::string_view what = "boolean");

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace costsense::text
