#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "young/poly.hpp"

namespace young {

// Phi_r, computed by dividing x^r - 1 by Phi_d for every proper divisor d of r.
const poly::Poly& cyclotomic_polynomial(int r);

// Element of Q(xi_r) as a residue modulo Phi_r, degree < phi(r).
class Cyclotomic {
public:
    Cyclotomic() = default;  // order 0 marks "unset"; arithmetic requires r >= 1
    Cyclotomic(const Rational& c, int r);
    static Cyclotomic xi(int r) { return xi_power(1, r); }
    static Cyclotomic xi_power(long k, int r);
    static Cyclotomic from_poly(poly::Poly p, int r);

    int order() const { return r_; }
    const poly::Poly& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Cyclotomic operator-() const;
    Cyclotomic inverse() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.r_ == b.r_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;  // "c0+c1*z+..."
    static Cyclotomic parse(std::string_view s, int r);

private:
    int r_ = 0;
    poly::Poly c_;
};

}  // namespace young
