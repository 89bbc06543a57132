#include "young/qrational.hpp"

#include <cctype>

#include "young/errors.hpp"

namespace young {

QRational::QRational(const Laurent& num, const Laurent& den) : num_(num), den_(den) { canonicalize(); }

void QRational::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    int shift = num_.low() - den_.low();
    poly::Poly n = num_.coeffs();
    poly::Poly d = den_.coeffs();
    if (n.size() > 1 && d.size() > 1) {
        poly::Poly g = poly::gcd(n, d);
        if (poly::degree(g) > 0) {
            n = poly::exact_div(n, g);
            d = poly::exact_div(d, g);
        }
    }
    Integer l = 1, g = 0;
    for (const auto& c : d) l = lcm(l, Integer(c.get_den()));
    for (const auto& c : d) g = gcd(g, Integer(Rational(c * l).get_num()));
    Rational s(l, g);
    s.canonicalize();
    if (d.back() < 0) s = -s;
    if (s != 1) {
        for (auto& c : n) c *= s;
        for (auto& c : d) c *= s;
    }
    num_ = Laurent::from_poly(std::move(n), shift);
    den_ = Laurent::from_poly(std::move(d), 0);
}

QRational QRational::operator-() const {
    QRational r(*this);
    r.num_ = -r.num_;
    return r;
}

QRational QRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return QRational(den_, num_);
}

QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
    return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    if (a.is_zero()) return {};
    return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational QRational::eval(const Rational& q0) const {
    if (q0 == 0) throw PreconditionError("rational function evaluated at q = 0");
    Rational d = den_.eval(q0);
    if (d == 0) throw DivisionByZero("pole of " + to_string() + " at q = " + young::to_string(q0));
    return num_.eval(q0) / d;
}

std::string QRational::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits "(body)rest" at the matching parenthesis.
bool take_group(std::string_view s, std::string_view& body, std::string_view& rest) {
    if (s.empty() || s.front() != '(') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
            body = s.substr(1, i - 1);
            rest = strip(s.substr(i + 1));
            return true;
        }
    }
    return false;
}

}  // namespace

QRational QRational::parse(std::string_view text) {
    std::string_view s = strip(text);
    std::string_view body, rest;
    if (!take_group(s, body, rest)) return QRational(Laurent::parse(s));
    Laurent num = Laurent::parse(body);
    if (rest.empty()) return QRational(num);
    if (rest.front() != '/') throw ParseError("invalid rational function: '" + std::string(text) + "'");
    std::string_view den_text = strip(rest.substr(1)), den_body, tail;
    Laurent den = take_group(den_text, den_body, tail) ? Laurent::parse(den_body) : Laurent::parse(den_text);
    if (!tail.empty()) throw ParseError("invalid rational function: '" + std::string(text) + "'");
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return QRational(num, den);
}

Rational evaluate_q(const QRational& f, const Rational& q0) { return f.eval(q0); }

}  // namespace young
