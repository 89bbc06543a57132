#pragma once

#include <map>
#include <string>
#include <string_view>

#include "young/rational.hpp"

namespace young::detail {

// Sum of terms "c", "c*v", "v^k", "-c*v^-k" in ascending exponent; "0" when empty.
std::string format_terms(const std::map<int, Rational>& terms, char var);

// Inverse of format_terms. Whitespace is ignored and "3q" is read as "3*q".
std::map<int, Rational> parse_terms(std::string_view s, char var);

}  // namespace young::detail
