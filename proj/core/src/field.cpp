#include "young/field.hpp"

#include "young/errors.hpp"

namespace young {

std::string FieldDesc::name() const {
    switch (kind) {
        case FieldKind::rational: return "rational";
        case FieldKind::q: return "q";
        case FieldKind::cyclotomic: return "cyclotomic:" + std::to_string(order);
    }
    return "?";
}

FieldDesc FieldDesc::parse(std::string_view s) {
    if (s == "rational") return rational();
    if (s == "q" || s == "q-with-params") return q();
    if (s.substr(0, 11) == "cyclotomic:") {
        Rational r = parse_rational(s.substr(11));
        if (!is_integer(r) || r < 1 || r > 1000) throw ParseError("invalid cyclotomic order in '" + std::string(s) + "'");
        return cyclotomic(static_cast<int>(r.get_num().get_si()));
    }
    throw ParseError("unknown field '" + std::string(s) + "'");
}

FieldDesc Scalar::field() const {
    switch (v_.index()) {
        case 0: return FieldDesc::rational();
        case 1: return FieldDesc::q();
        default: return FieldDesc::cyclotomic(std::get<2>(v_).order());
    }
}

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x == 0;
            else
                return x.is_zero();
        },
        v_);
}

bool Scalar::is_one() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x == 1;
            else
                return x.is_one();
        },
        v_);
}

const Rational& Scalar::rational() const {
    if (v_.index() != 0) throw FieldMismatch("expected a rational scalar, found " + field().name());
    return std::get<0>(v_);
}

const QRational& Scalar::qrational() const {
    if (v_.index() != 1) throw FieldMismatch("expected a rational function of q, found " + field().name());
    return std::get<1>(v_);
}

const Cyclotomic& Scalar::cyclotomic() const {
    if (v_.index() != 2) throw FieldMismatch("expected a cyclotomic scalar, found " + field().name());
    return std::get<2>(v_);
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch("field mismatch: " + a.field().name() + " vs " + b.field().name());
}

template <class Op>
Scalar apply(const Scalar& a, const Scalar& b, Op op) {
    require_same(a, b);
    switch (a.field().kind) {
        case FieldKind::rational: return Scalar(Rational(op(a.rational(), b.rational())));
        case FieldKind::q: return Scalar(op(a.qrational(), b.qrational()));
        case FieldKind::cyclotomic: return Scalar(op(a.cyclotomic(), b.cyclotomic()));
    }
    throw InvariantError("unreachable field kind");
}

}  // namespace

Scalar Scalar::operator-() const {
    return std::visit([](const auto& x) { return Scalar(std::decay_t<decltype(x)>(-x)); }, v_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero");
    switch (v_.index()) {
        case 0: return Scalar(Rational(1 / std::get<0>(v_)));
        case 1: return Scalar(std::get<1>(v_).inverse());
        default: return Scalar(std::get<2>(v_).inverse());
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return apply(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return a.v_ == b.v_;
}

std::string Scalar::to_string() const {
    switch (v_.index()) {
        case 0: return young::to_string(std::get<0>(v_));
        case 1: return std::get<1>(v_).to_string();
        default: return std::get<2>(v_).to_string();
    }
}

Scalar Scalar::parse(std::string_view s, const FieldDesc& f) {
    switch (f.kind) {
        case FieldKind::rational: return Scalar(parse_rational(s));
        case FieldKind::q: return Scalar(QRational::parse(s));
        case FieldKind::cyclotomic: return Scalar(Cyclotomic::parse(s, f.order));
    }
    throw ParseError("unknown field");
}

Scalar zero(const FieldDesc& f) { return from_rational(0, f); }
Scalar one(const FieldDesc& f) { return from_rational(1, f); }

Scalar from_rational(const Rational& x, const FieldDesc& f) {
    switch (f.kind) {
        case FieldKind::rational: return Scalar(x);
        case FieldKind::q: return Scalar(QRational(x));
        case FieldKind::cyclotomic: return Scalar(Cyclotomic(x, f.order));
    }
    throw InvariantError("unreachable field kind");
}

Scalar to_cyclotomic(const Scalar& x, int r) {
    switch (x.field().kind) {
        case FieldKind::rational: return Scalar(Cyclotomic(x.rational(), r));
        case FieldKind::cyclotomic:
            if (x.cyclotomic().order() != r) throw FieldMismatch("cyclotomic order mismatch");
            return x;
        case FieldKind::q: break;
    }
    throw FieldMismatch("cannot embed a rational function of q into a cyclotomic field");
}

Scalar pow(const Scalar& x, long k) {
    Scalar base = k < 0 ? x.inverse() : x;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Scalar acc = one(x.field());
    while (e > 0) {
        if (e & 1UL) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

bool check_semisimple(const std::vector<Scalar>& u, const Scalar& q, int n) {
    if (q.is_zero()) throw PreconditionError("q must be nonzero");
    for (const auto& x : u)
        if (x.is_zero()) throw PreconditionError("parameters u_k must be nonzero");
    const FieldDesc f = q.field();
    Scalar q2 = q * q;
    Scalar geometric = zero(f), q2k = one(f);
    for (int k = 1; k <= n; ++k) {
        geometric += q2k;
        q2k *= q2;
        if ((pow(q, 1 - k) * geometric).is_zero()) return false;
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (i == j) continue;
            Scalar ratio = u[i] / u[j];
            Scalar p = one(f);
            for (int k = 0; k <= n; ++k, p *= q2)
                if (ratio == p) return false;
        }
    return true;
}

}  // namespace young
