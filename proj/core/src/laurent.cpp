#include "young/laurent.hpp"

#include <algorithm>
#include <map>

#include "terms.hpp"
#include "young/errors.hpp"

namespace young {

Laurent::Laurent(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
    Laurent r(c);
    if (!r.is_zero()) r.low_ = exponent;
    return r;
}

Laurent Laurent::from_poly(poly::Poly p, int low) {
    Laurent r;
    r.c_ = std::move(p);
    r.low_ = low;
    r.normalize();
    return r;
}

void Laurent::normalize() {
    poly::trim(c_);
    if (c_.empty()) {
        low_ = 0;
        return;
    }
    std::size_t z = 0;
    while (c_[z] == 0) ++z;
    if (z > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
        low_ += static_cast<int>(z);
    }
}

Rational Laurent::coeff(int exponent) const {
    int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Laurent Laurent::operator-() const {
    Laurent r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

Laurent combine(const Laurent& a, const Laurent& b, int sign) {
    if (a.is_zero()) return sign > 0 ? b : -b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low(), b.low());
    int hi = std::max(a.high(), b.high());
    poly::Poly c(hi - lo + 1);
    for (int e = a.low(); e <= a.high(); ++e) c[e - lo] = a.coeffs()[e - a.low()];
    for (int e = b.low(); e <= b.high(); ++e) {
        if (sign > 0)
            c[e - lo] += b.coeffs()[e - b.low()];
        else
            c[e - lo] -= b.coeffs()[e - b.low()];
    }
    return Laurent::from_poly(std::move(c), lo);
}

}  // namespace

Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, 1); }
Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, -1); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Laurent::from_poly(poly::mul(a.c_, b.c_), a.low_ + b.low_);
}

Laurent Laurent::shifted(int k) const {
    Laurent r(*this);
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Rational Laurent::eval(const Rational& q0) const {
    if (q0 == 0) throw PreconditionError("Laurent polynomial evaluated at q = 0");
    if (is_zero()) return 0;
    Rational v = poly::eval(c_, q0);
    Rational base = low_ >= 0 ? q0 : Rational(1 / q0);
    for (int k = 0, m = low_ >= 0 ? low_ : -low_; k < m; ++k) v *= base;
    return v;
}

std::string Laurent::to_string() const {
    std::map<int, Rational> terms;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) terms[low_ + static_cast<int>(k)] = c_[k];
    return detail::format_terms(terms, 'q');
}

Laurent Laurent::parse(std::string_view s) {
    auto terms = detail::parse_terms(s, 'q');
    if (terms.empty()) return {};
    int lo = terms.begin()->first, hi = terms.rbegin()->first;
    if (hi - lo > 100000) throw ParseError("polynomial exponent range too large");
    poly::Poly c(hi - lo + 1);
    for (const auto& [e, v] : terms) c[e - lo] = v;
    return from_poly(std::move(c), lo);
}

}  // namespace young
