#pragma once

#include <string>
#include <string_view>

#include "young/laurent.hpp"

namespace young {

// Element of Q(q) as a quotient of Laurent polynomials in canonical form:
// the polynomial gcd is removed and the denominator has lowest exponent 0,
// positive leading coefficient and integer content 1.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRational(int c) : QRational(Rational(c)) {}        // NOLINT(google-explicit-constructor)
    QRational(const Laurent& p) : num_(p), den_(1) { canonicalize(); }  // NOLINT(google-explicit-constructor)
    QRational(const Laurent& num, const Laurent& den);
    static QRational q() { return QRational(Laurent::q()); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    QRational operator-() const;
    QRational inverse() const;
    friend QRational operator+(const QRational& a, const QRational& b);
    friend QRational operator-(const QRational& a, const QRational& b);
    friend QRational operator*(const QRational& a, const QRational& b);
    friend QRational operator/(const QRational& a, const QRational& b);
    friend bool operator==(const QRational& a, const QRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

    // Exact value at q0; throws on q0 = 0 or a pole.
    Rational eval(const Rational& q0) const;
    std::string to_string() const;  // "(num)/(den)"
    static QRational parse(std::string_view s);

private:
    void canonicalize();
    Laurent num_;
    Laurent den_;
};

Rational evaluate_q(const QRational& f, const Rational& q0);

}  // namespace young
