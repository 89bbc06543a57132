#include "young/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "terms.hpp"
#include "young/errors.hpp"

namespace young {

namespace {

poly::Poly compute_cyclotomic(int r) {
    poly::Poly p(r + 1);
    p[0] = -1;
    p[r] = 1;
    for (int d = 1; d < r; ++d)
        if (r % d == 0) p = poly::exact_div(p, cyclotomic_polynomial(d));
    return p;
}

void check_order(int r) {
    if (r < 1) throw PreconditionError("cyclotomic order must be positive");
}

void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw FieldMismatch("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
}

}  // namespace

const poly::Poly& cyclotomic_polynomial(int r) {
    check_order(r);
    // Values are immutable once inserted; std::map never relocates them.
    static std::mutex mu;
    static std::map<int, poly::Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
    }
    poly::Poly p = compute_cyclotomic(r);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(r, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(const Rational& c, int r) : r_(r) {
    check_order(r);
    if (c != 0) c_.push_back(c);
}

Cyclotomic Cyclotomic::from_poly(poly::Poly p, int r) {
    check_order(r);
    Cyclotomic x;
    x.r_ = r;
    poly::trim(p);
    x.c_ = poly::divmod(p, cyclotomic_polynomial(r)).second;
    return x;
}

Cyclotomic Cyclotomic::xi_power(long k, int r) {
    check_order(r);
    long e = ((k % r) + r) % r;
    poly::Poly p(e + 1);
    p[e] = 1;
    return from_poly(std::move(p), r);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x(*this);
    for (auto& c : x.c_) c = -c;
    return x;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in cyclotomic field");
    Cyclotomic x;
    x.r_ = r_;
    x.c_ = poly::inverse_mod(c_, cyclotomic_polynomial(r_));
    return x;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic x;
    x.r_ = a.r_;
    x.c_ = poly::add(a.c_, b.c_);
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic x;
    x.r_ = a.r_;
    x.c_ = poly::sub(a.c_, b.c_);
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    return Cyclotomic::from_poly(poly::mul(a.c_, b.c_), a.r_);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    return a * b.inverse();
}

std::string Cyclotomic::to_string() const {
    std::map<int, Rational> terms;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) terms[static_cast<int>(k)] = c_[k];
    return detail::format_terms(terms, 'z');
}

Cyclotomic Cyclotomic::parse(std::string_view s, int r) {
    check_order(r);
    auto terms = detail::parse_terms(s, 'z');
    Cyclotomic acc(0, r);
    for (const auto& [e, c] : terms) acc = acc + Cyclotomic::xi_power(e, r) * Cyclotomic(c, r);
    return acc;
}

}  // namespace young
