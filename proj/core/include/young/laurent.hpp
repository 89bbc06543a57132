#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "young/poly.hpp"
#include "young/rational.hpp"

namespace young {

// Laurent polynomial in q: coefficient c_[k] belongs to q^(low_ + k).
// Stored trimmed at both ends; zero has no coefficients.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)
    Laurent(int c) : Laurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static Laurent monomial(const Rational& c, int exponent);
    static Laurent q() { return monomial(1, 1); }
    static Laurent from_poly(poly::Poly p, int low);

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    Rational coeff(int exponent) const;
    const poly::Poly& coeffs() const { return c_; }
    bool is_monomial() const { return c_.size() == 1; }

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent shifted(int k) const;
    Rational eval(const Rational& q0) const;  // q0 != 0
    std::string to_string() const;
    static Laurent parse(std::string_view s);

private:
    void normalize();
    int low_ = 0;
    poly::Poly c_;
};

}  // namespace young
