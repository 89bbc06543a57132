#include "young/algebra.hpp"

#include "young/errors.hpp"

namespace young {

std::string family_name(Family f) {
    switch (f) {
        case Family::symmetric: return "symmetric";
        case Family::hecke_A: return "hecke_A";
        case Family::hecke_B: return "hecke_B";
        case Family::ariki_koike: return "ariki_koike";
        case Family::wreath_grn: return "grn";
        case Family::affine_placed: return "affine_placed";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "symmetric" || s == "sym") return Family::symmetric;
    if (s == "hecke_A" || s == "hecke" || s == "hecke_a") return Family::hecke_A;
    if (s == "hecke_B" || s == "hecke_b") return Family::hecke_B;
    if (s == "ariki_koike" || s == "ak") return Family::ariki_koike;
    if (s == "grn" || s == "wreath_grn" || s == "wreath") return Family::wreath_grn;
    if (s == "affine_placed" || s == "affine") return Family::affine_placed;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

AlgebraSpec AlgebraSpec::hecke_A(std::optional<Rational> q) {
    AlgebraSpec s;
    s.family = Family::hecke_A;
    s.q = std::move(q);
    return s;
}

AlgebraSpec AlgebraSpec::hecke_B(const Scalar& u1, const Scalar& u2, std::optional<Rational> q) {
    AlgebraSpec s;
    s.family = Family::hecke_B;
    s.r = 2;
    s.u = {u1, u2};
    s.q = std::move(q);
    return s;
}

AlgebraSpec AlgebraSpec::ariki_koike(std::vector<Scalar> u, std::optional<Rational> q) {
    AlgebraSpec s;
    s.family = Family::ariki_koike;
    s.r = static_cast<int>(u.size());
    s.u = std::move(u);
    s.q = std::move(q);
    return s;
}

AlgebraSpec AlgebraSpec::wreath_grn(int r) {
    AlgebraSpec s;
    s.family = Family::wreath_grn;
    s.r = r;
    return s;
}

AlgebraSpec AlgebraSpec::affine_placed(std::optional<Rational> q) {
    AlgebraSpec s;
    s.family = Family::affine_placed;
    s.q = std::move(q);
    return s;
}

bool AlgebraSpec::is_q_family() const { return family != Family::symmetric && family != Family::wreath_grn; }

FieldDesc AlgebraSpec::field() const {
    return is_q_family() && !q ? FieldDesc::q() : FieldDesc::rational();
}

std::string AlgebraSpec::field_label() const {
    if (!is_q_family() || q) return "rational";
    return u.empty() ? "q" : "q-with-params";
}

Scalar AlgebraSpec::q_scalar() const {
    if (!is_q_family()) return Scalar(Rational(1));
    return q ? Scalar(*q) : Scalar(QRational::q());
}

Scalar AlgebraSpec::off() const { return is_q_family() ? q_scalar().inverse() : one(field()); }

Scalar AlgebraSpec::in_field(const Scalar& s) const {
    const AlgebraSpec& spec = *this;
    FieldDesc f = spec.field();
    switch (s.field().kind) {
        case FieldKind::rational: return from_rational(s.rational(), f);
        case FieldKind::q:
            if (f.kind == FieldKind::q) return s;
            if (spec.q) return Scalar(s.qrational().eval(*spec.q));
            break;
        case FieldKind::cyclotomic: break;
    }
    throw FieldMismatch("parameter " + s.to_string() + " does not live in field " + f.name());
}

namespace {

std::vector<Scalar> component_weights(const AlgebraSpec& spec, const Shape& shape) {
    std::vector<Scalar> w;
    switch (spec.family) {
        case Family::hecke_B:
        case Family::ariki_koike:
            for (const auto& u : spec.u) w.push_back(spec.in_field(u));
            break;
        case Family::affine_placed:
            for (const auto& c : shape.components())
                w.push_back(c.page_weight ? spec.in_field(*c.page_weight) : one(spec.field()));
            break;
        default: w.assign(shape.r(), one(spec.field()));
    }
    return w;
}

}  // namespace

void AlgebraSpec::validate(const Shape& shape) const {
    if (q && *q == 0) throw PreconditionError("q must be nonzero");
    if (shape.has_page_weights() && family != Family::affine_placed)
        throw PreconditionError("page weights are only meaningful for the affine_placed family");
    switch (family) {
        case Family::symmetric:
        case Family::hecke_A:
            if (shape.r() != 1) throw PreconditionError(family_name(family) + " needs a single-component shape");
            if (!u.empty()) throw PreconditionError(family_name(family) + " takes no u parameters");
            break;
        case Family::hecke_B:
            if (shape.r() != 2 || r != 2 || u.size() != 2) throw PreconditionError("hecke_B needs r = 2, two components and two parameters");
            if (!(in_field(u[0]) * in_field(u[1])).is_one()) throw PreconditionError("hecke_B needs u_1 = u_2^{-1}");
            break;
        case Family::ariki_koike:
            if (static_cast<int>(u.size()) != shape.r() || r != shape.r())
                throw PreconditionError("ariki_koike needs one u parameter per component");
            break;
        case Family::wreath_grn:
            if (r != shape.r()) throw PreconditionError("grn needs r equal to the number of components");
            if (!shape.is_multipartition()) throw PreconditionError("grn needs components without inner partitions");
            break;
        case Family::affine_placed: break;
    }
    for (const auto& x : u)
        if (in_field(x).is_zero()) throw PreconditionError("parameters u_k must be nonzero");
    if (family == Family::hecke_A || family == Family::hecke_B || family == Family::ariki_koike) {
        std::vector<Scalar> w = component_weights(*this, shape);
        Scalar q = q_scalar();
        if (shape.n() >= 2 && (q * q).is_one())
            throw DegenerateWeight("q^2 = 1 collapses the weights of distinct contents");
        if (!check_semisimple(w, q, shape.n()))
            throw DegenerateWeight("parameters are not semisimple for n = " + std::to_string(shape.n()));
    }
}

WeightModel::WeightModel(const AlgebraSpec& spec, const Shape& shape) : field_(spec.field()), off_(spec.off()), nb_(shape.n()) {
    const bool qfam = spec.is_q_family();
    std::vector<Scalar> w = component_weights(spec, shape);
    Scalar q = spec.q_scalar();
    for (const auto& b : shape.boxes()) {
        if (qfam)
            x_.push_back(w[b.comp] * pow(q, 2L * b.content()));
        else
            x_.push_back(Scalar(Rational(b.content())));
    }
    a_.assign(static_cast<std::size_t>(nb_) * nb_, zero(field_));
    ok_.assign(a_.size(), 0);
    Scalar num = qfam ? q - q.inverse() : zero(field_);
    for (int i = 0; i < nb_; ++i)
        for (int j = 0; j < nb_; ++j) {
            if (i == j) continue;
            std::size_t k = static_cast<std::size_t>(i) * nb_ + j;
            const Box& bi = shape.box(i);
            const Box& bj = shape.box(j);
            if (spec.family == Family::wreath_grn && bi.comp != bj.comp) {
                ok_[k] = 1;
                continue;
            }
            if (qfam) {
                if (x_[i] == x_[j]) continue;
                a_[k] = num / (one(field_) - x_[i] / x_[j]);
            } else {
                int d = bj.content() - bi.content();
                if (d == 0) continue;
                a_[k] = Scalar(Rational(Rational(1) / d));
            }
            ok_[k] = 1;
        }
}

const Scalar& WeightModel::a_boxes(int bi, int bj) const {
    std::size_t k = static_cast<std::size_t>(bi) * nb_ + bj;
    if (bi == bj || !ok_[k]) throw DegenerateWeight("axial-distance weight has a vanishing denominator");
    return a_[k];
}

}  // namespace young
