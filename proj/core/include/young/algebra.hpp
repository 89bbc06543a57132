#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "young/field.hpp"
#include "young/tableau.hpp"

namespace young {

enum class Family { symmetric, hecke_A, hecke_B, ariki_koike, wreath_grn, affine_placed };

std::string family_name(Family f);
Family parse_family(std::string_view s);

// Algebra and parameters. q is symbolic unless a rational value is supplied.
struct AlgebraSpec {
    Family family = Family::symmetric;
    int r = 1;
    std::vector<Scalar> u;    // u_1..u_r (ariki_koike, hecke_B)
    std::optional<Rational> q;  // nullopt: symbolic

    static AlgebraSpec symmetric() { return {}; }
    static AlgebraSpec hecke_A(std::optional<Rational> q = std::nullopt);
    static AlgebraSpec hecke_B(const Scalar& u1, const Scalar& u2, std::optional<Rational> q = std::nullopt);
    static AlgebraSpec ariki_koike(std::vector<Scalar> u, std::optional<Rational> q = std::nullopt);
    static AlgebraSpec wreath_grn(int r);
    static AlgebraSpec affine_placed(std::optional<Rational> q = std::nullopt);

    bool is_q_family() const;
    bool has_zeroth() const { return family == Family::hecke_B || family == Family::ariki_koike || family == Family::wreath_grn; }
    // Field of the seminormal generators T_1..T_{n-1}.
    FieldDesc field() const;
    // "rational", "q", "q-with-params" or "cyclotomic:r" for the zeroth generator of G(r,1,n).
    std::string field_label() const;
    Scalar q_scalar() const;  // q in field()
    Scalar off() const;       // 1 or q^{-1}
    // A parameter moved into field(); rational functions of q are evaluated when q has a value.
    Scalar in_field(const Scalar& s) const;
    // Family constraints and, where applicable, semisimplicity; throws PreconditionError.
    void validate(const Shape& shape) const;
};

// Weighted contents and the axial-distance coefficients a_{i,j} for one shape.
class WeightModel {
public:
    WeightModel(const AlgebraSpec& spec, const Shape& shape);

    const FieldDesc& field() const { return field_; }
    const Scalar& off() const { return off_; }
    // u_k q^{2 ct(b)} for q families, the plain content otherwise.
    const Scalar& weighted_content(int box) const { return x_[box]; }
    // a for the entries sitting in boxes bi and bj; throws DegenerateWeight when undefined.
    const Scalar& a_boxes(int bi, int bj) const;
    const Scalar& a(const Tableau& t, int i, int j) const { return a_boxes(t.box_index(i), t.box_index(j)); }

private:
    FieldDesc field_;
    Scalar off_;
    int nb_ = 0;
    std::vector<Scalar> x_;
    std::vector<Scalar> a_;
    std::vector<char> ok_;
};

}  // namespace young
