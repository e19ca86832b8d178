#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cofocus::text {

std::string trim(std::string_view s);
std::string lower(std::string_view s);

/// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_ws(std::string_view s);

/// Splits on a single-character delimiter; no trimming, keeps empty pieces.
std::vector<std::string> split(std::string_view s, char delim);

/// Shortest round-trip decimal form of a double ("inf"/"nan" spelled out).
std::string format_double(double v);

/// RFC-4180-style quoting, applied only when the field needs it.
std::string csv_escape(std::string_view field);

} // namespace cofocus::text
