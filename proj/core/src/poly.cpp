#include "young/poly.hpp"

#include <algorithm>

#include "young/errors.hpp"

namespace young::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly rem(a);
    trim(rem);
    if (rem.size() < b.size()) return {Poly{}, rem};
    Poly quo(rem.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (int k = degree(rem) - degree(b); k >= 0; --k) {
        Rational c = rem[k + b.size() - 1] / lead;
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    rem.resize(b.size() - 1);
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw InvariantError("inexact polynomial division");
    return q;
}

Poly monic(const Poly& a) {
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = m, r1 = divmod(a, m).second;
    Poly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (degree(r0) != 0) throw DivisionByZero("element is not invertible modulo the given polynomial");
    return divmod(scale(s0, 1 / r0[0]), m).second;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace young::poly
