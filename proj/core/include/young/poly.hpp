#pragma once

#include <utility>
#include <vector>

#include "young/rational.hpp"

// Dense univariate polynomials over Q; index = degree, no trailing zeros.
namespace young::poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);
// Returns s with s*a = 1 mod m; requires gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Rational eval(const Poly& p, const Rational& x);

}  // namespace young::poly
