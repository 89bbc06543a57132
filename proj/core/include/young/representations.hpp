#pragma once

#include <memory>
#include <string>
#include <vector>

#include "young/algebra.hpp"
#include "young/bruhat.hpp"
#include "young/matrix.hpp"

namespace young {

// A seminormal module: the shape, its weak Bruhat graph and the weights of one algebra.
class SeminormalModule {
public:
    SeminormalModule(AlgebraSpec spec, ShapePtr shape);
    SeminormalModule(AlgebraSpec spec, const Shape& shape) : SeminormalModule(std::move(spec), std::make_shared<const Shape>(shape)) {}

    const AlgebraSpec& spec() const { return spec_; }
    const Shape& shape() const { return graph_.shape(); }
    const ShapePtr& shape_ptr() const { return graph_.shape_ptr(); }
    const BruhatGraph& graph() const { return graph_; }
    const WeightModel& weights() const { return weights_; }
    FieldDesc field() const { return weights_.field(); }
    int dim() const { return graph_.size(); }
    int n() const { return graph_.n(); }
    // a_i(T) = a_{i,i+1}(T) for node k.
    const Scalar& a(int k, int i) const { return weights_.a(graph_.node(k), i, i + 1); }
    std::vector<std::string> basis_words() const;

private:
    AlgebraSpec spec_;
    BruhatGraph graph_;
    WeightModel weights_;
};

// T_i (or s_i) in the seminormal basis, 1 <= i < n.
Matrix seminormal_generator(const SeminormalModule& m, int i);
// T_0 for hecke_B and ariki_koike, s_0 over Q(xi_r) for grn.
Matrix zeroth_generator(const SeminormalModule& m);
// X^{e_1}, ..., X^{e_n}: diagonal with the weighted contents; q families only.
std::vector<Matrix> x_generators(const SeminormalModule& m);
// A^{-1} rho_V(T_i) A.
Matrix natural_generator(const SeminormalModule& m, const Matrix& transition, int i);
Matrix natural_generator(const SeminormalModule& m, int i);

struct RelationCheck {
    std::string relation;
    bool passed = false;
    std::string witness;  // first differing entry on failure
};

std::vector<RelationCheck> verify_relations(const SeminormalModule& m);
std::string relations_to_json(const std::vector<RelationCheck>& report);

}  // namespace young
