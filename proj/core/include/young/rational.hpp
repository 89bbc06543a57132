#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace young {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; the result is canonical.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace young
