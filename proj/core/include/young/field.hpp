#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "young/cyclotomic.hpp"
#include "young/qrational.hpp"
#include "young/rational.hpp"

namespace young {

enum class FieldKind { rational, q, cyclotomic };

// Identifies one coefficient field; the cyclotomic field carries its order.
struct FieldDesc {
    FieldKind kind = FieldKind::rational;
    int order = 0;

    static FieldDesc rational() { return {FieldKind::rational, 0}; }
    static FieldDesc q() { return {FieldKind::q, 0}; }
    static FieldDesc cyclotomic(int r) { return {FieldKind::cyclotomic, r}; }

    std::string name() const;  // "rational", "q", "cyclotomic:r"
    static FieldDesc parse(std::string_view s);
    friend bool operator==(const FieldDesc& a, const FieldDesc& b) { return a.kind == b.kind && a.order == b.order; }
    friend bool operator!=(const FieldDesc& a, const FieldDesc& b) { return !(a == b); }
};

// An exact scalar in exactly one field. Mixed-field arithmetic throws FieldMismatch.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& x) : v_(x) {}    // NOLINT(google-explicit-constructor)
    Scalar(int x) : v_(Rational(x)) {}      // NOLINT(google-explicit-constructor)
    Scalar(const QRational& x) : v_(x) {}   // NOLINT(google-explicit-constructor)
    Scalar(const Cyclotomic& x) : v_(x) {}  // NOLINT(google-explicit-constructor)

    FieldDesc field() const;
    bool is_zero() const;
    bool is_one() const;

    const Rational& rational() const;
    const QRational& qrational() const;
    const Cyclotomic& cyclotomic() const;

    Scalar operator-() const;
    Scalar inverse() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    static Scalar parse(std::string_view s, const FieldDesc& f);

private:
    std::variant<Rational, QRational, Cyclotomic> v_;
};

Scalar zero(const FieldDesc& f);
Scalar one(const FieldDesc& f);
Scalar from_rational(const Rational& x, const FieldDesc& f);
// Embeds a rational or cyclotomic scalar into Q(xi_r).
Scalar to_cyclotomic(const Scalar& x, int r);
Scalar pow(const Scalar& x, long k);

// Exact semisimplicity test: u_i/u_j avoids {1, q^2, ..., q^(2n)} for i != j and [k]_q != 0 for k <= n,
// with [k]_q = q^(1-k) (1 + q^2 + ... + q^(2k-2)).
bool check_semisimple(const std::vector<Scalar>& u, const Scalar& q, int n);

}  // namespace young
