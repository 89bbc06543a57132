#include "young/representations.hpp"

#include "json.hpp"

#include "young/errors.hpp"
#include "young/transition.hpp"

namespace young {

SeminormalModule::SeminormalModule(AlgebraSpec spec, ShapePtr shape)
    : spec_((spec.validate(*shape), std::move(spec))), graph_(std::move(shape)), weights_(spec_, graph_.shape()) {}

std::vector<std::string> SeminormalModule::basis_words() const {
    std::vector<std::string> w;
    for (const auto& t : graph_.nodes()) w.push_back(t.word_string());
    return w;
}

Matrix seminormal_generator(const SeminormalModule& m, int i) {
    if (i < 1 || i >= m.n()) throw PreconditionError("generator index out of range");
    const int f = m.dim();
    Matrix g(f, f, m.field());
    const Scalar& off = m.weights().off();
    for (int k = 0; k < f; ++k) {
        const Scalar& a = m.a(k, i);
        SparseColumn c;
        c.emplace_back(k, a);
        int s = m.graph().neighbor(k, i);
        if (s >= 0) c.emplace_back(s, off + a);
        if (c.size() == 2 && c[1].first < c[0].first) std::swap(c[0], c[1]);
        g.set_column(k, std::move(c));
    }
    g.basis = m.basis_words();
    return g;
}

Matrix zeroth_generator(const SeminormalModule& m) {
    switch (m.spec().family) {
        case Family::hecke_B:
        case Family::ariki_koike: {
            std::vector<Scalar> d;
            for (const auto& t : m.graph().nodes()) d.push_back(m.weights().weighted_content(t.box_index(1)));
            return Matrix::diagonal(d, m.field());
        }
        case Family::wreath_grn: {
            const int r = m.spec().r;
            std::vector<Scalar> d;
            for (const auto& t : m.graph().nodes()) d.push_back(Scalar(Cyclotomic::xi_power(t.box_of(1).comp, r)));
            return Matrix::diagonal(d, FieldDesc::cyclotomic(r));
        }
        default: break;
    }
    throw PreconditionError(family_name(m.spec().family) + " has no zeroth generator");
}

std::vector<Matrix> x_generators(const SeminormalModule& m) {
    if (!m.spec().is_q_family()) throw PreconditionError(family_name(m.spec().family) + " has no X generators");
    std::vector<Matrix> xs;
    for (int i = 1; i <= m.n(); ++i) {
        std::vector<Scalar> d;
        for (const auto& t : m.graph().nodes()) d.push_back(m.weights().weighted_content(t.box_index(i)));
        xs.push_back(Matrix::diagonal(d, m.field()));
    }
    return xs;
}

Matrix natural_generator(const SeminormalModule& m, const Matrix& transition, int i) {
    Matrix n = matmul(triangular_inverse(transition), matmul(seminormal_generator(m, i), transition));
    n.basis = m.basis_words();
    return n;
}

Matrix natural_generator(const SeminormalModule& m, int i) { return natural_generator(m, transition_recursive(m), i); }

namespace {

class Checker {
public:
    explicit Checker(std::vector<RelationCheck>& out) : out_(out) {}
    void equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
        RelationCheck c{name, lhs == rhs, ""};
        if (!c.passed) {
            for (int j = 0; j < lhs.cols() && c.witness.empty(); ++j)
                for (int i = 0; i < lhs.rows(); ++i) {
                    Scalar x = lhs.at(i, j), y = rhs.at(i, j);
                    if (x != y) {
                        c.witness = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + x.to_string() + " != " + y.to_string();
                        break;
                    }
                }
        }
        out_.push_back(std::move(c));
    }

private:
    std::vector<RelationCheck>& out_;
};

std::string gen(const char* name, int i) { return std::string(name) + std::to_string(i); }

}  // namespace

std::vector<RelationCheck> verify_relations(const SeminormalModule& m) {
    std::vector<RelationCheck> report;
    Checker check(report);
    const int n = m.n();
    const Family fam = m.spec().family;
    const bool grn = fam == Family::wreath_grn;
    const FieldDesc f = grn ? FieldDesc::cyclotomic(m.spec().r) : m.field();
    const char* t = m.spec().is_q_family() ? "T" : "s";

    std::vector<Matrix> g(n);
    for (int i = 1; i < n; ++i) {
        g[i] = seminormal_generator(m, i);
        g[i].basis.clear();
        if (grn) g[i] = g[i].map([&](const Scalar& x) { return to_cyclotomic(x, f.order); }, f);
    }
    const Matrix id = Matrix::identity(m.dim(), f);

    for (int i = 1; i < n; ++i) {
        if (m.spec().is_q_family()) {
            Scalar c = m.spec().q_scalar() - m.spec().q_scalar().inverse();
            check.equal("quadratic(" + gen(t, i) + ")", matmul(g[i], g[i]), add(scale(g[i], c), id));
        } else {
            check.equal("involution(" + gen(t, i) + ")", matmul(g[i], g[i]), id);
        }
    }
    for (int i = 1; i + 1 < n; ++i)
        check.equal("braid(" + gen(t, i) + "," + gen(t, i + 1) + ")", matmul(g[i], matmul(g[i + 1], g[i])),
                    matmul(g[i + 1], matmul(g[i], g[i + 1])));
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            check.equal("commute(" + gen(t, i) + "," + gen(t, j) + ")", matmul(g[i], g[j]), matmul(g[j], g[i]));

    if (m.spec().has_zeroth()) {
        Matrix z = zeroth_generator(m);
        std::string z_name = grn ? "s0" : "T0";
        for (int j = 2; j < n; ++j)
            check.equal("commute(" + z_name + "," + gen(t, j) + ")", matmul(z, g[j]), matmul(g[j], z));
        if (n >= 2)
            check.equal("braid_b(" + z_name + "," + gen(t, 1) + ")", matmul(z, matmul(g[1], matmul(z, g[1]))),
                        matmul(g[1], matmul(z, matmul(g[1], z))));
        if (grn) {
            Matrix p = id;
            for (int k = 0; k < m.spec().r; ++k) p = matmul(p, z);
            check.equal("order(s0)", p, id);
        } else {
            Matrix p = id;
            std::string name = "cyclotomic(T0)";
            for (const auto& u : m.spec().u) {
                p = matmul(p, sub(z, scale(id, m.spec().in_field(u))));
            }
            check.equal(name, p, Matrix(m.dim(), m.dim(), f));
        }
    }

    if (m.spec().is_q_family()) {
        std::vector<Matrix> x = x_generators(m);
        x.insert(x.begin(), Matrix());  // 1-based
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    check.equal("commute(" + gen("T", i) + "," + gen("X", j) + ")", matmul(g[i], x[j]), matmul(x[j], g[i]));
        if (n >= 2) {
            check.equal("braid_x(X1,T1)", matmul(x[1], matmul(g[1], matmul(x[1], g[1]))),
                        matmul(g[1], matmul(x[1], matmul(g[1], x[1]))));
            for (int i = 1; i < n; ++i)
                check.equal("jucys_murphy(" + gen("X", i + 1) + ")", x[i + 1], matmul(g[i], matmul(x[i], g[i])));
        }
        if (m.spec().has_zeroth()) check.equal("zeroth_is_X1", zeroth_generator(m), x[1]);
    }
    return report;
}

std::string relations_to_json(const std::vector<RelationCheck>& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : report) {
        nlohmann::ordered_json e;
        e["relation"] = c.relation;
        e["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) e["witness"] = c.witness;
        arr.push_back(e);
    }
    return arr.dump(2);
}

}  // namespace young
