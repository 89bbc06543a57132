#include "young/transition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "young/errors.hpp"

namespace young {

namespace {

class ColumnBuilder {
public:
    ColumnBuilder(int n, const FieldDesc& f) : vals_(n, zero(f)), used_(n, false) {}
    void add(int i, Scalar v) {
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            vals_[i] = std::move(v);
        } else {
            vals_[i] += v;
        }
    }
    std::size_t touched() const { return touched_.size(); }
    SparseColumn take() {
        std::sort(touched_.begin(), touched_.end());
        SparseColumn c;
        for (int i : touched_) {
            if (!vals_[i].is_zero()) c.emplace_back(i, std::move(vals_[i]));
            used_[i] = false;
        }
        touched_.clear();
        return c;
    }

private:
    std::vector<Scalar> vals_;
    std::vector<bool> used_;
    std::vector<int> touched_;
};

Matrix assemble(const SeminormalModule& m, std::vector<SparseColumn> cols) {
    Matrix a(m.dim(), m.dim(), m.field());
    for (int k = 0; k < m.dim(); ++k) a.set_column(k, std::move(cols[k]));
    a.basis = m.basis_words();
    return a;
}

int descent(const BruhatGraph& g, int k) {
    for (int i = 1; i < g.n(); ++i) {
        int j = g.neighbor(k, i);
        if (j >= 0 && g.depth(j) == g.depth(k) - 1) return i;
    }
    throw InvariantError("node above the minimum has no descent");
}

}  // namespace

Matrix transition_recursive(const SeminormalModule& m, int threads, RecursionStats* stats) {
    const BruhatGraph& g = m.graph();
    const int f = g.size();
    const Scalar& off = m.weights().off();
    std::vector<SparseColumn> cols(f);
    cols[0].emplace_back(0, one(m.field()));
    std::atomic<std::uint64_t> ops{0};

    auto run = [&](const std::vector<int>& level, std::size_t begin, std::size_t end) {
        ColumnBuilder acc(f, m.field());
        std::uint64_t local = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int k = level[idx];
            const int l = descent(g, k);
            const int prev = g.neighbor(k, l);
            for (const auto& [s, v] : cols[prev]) {
                const Scalar& a = m.a(s, l);
                if (!a.is_zero()) acc.add(s, a * v);
                int up = g.neighbor(s, l);
                if (up >= 0) acc.add(up, (off + a) * v);
            }
            local += acc.touched();
            cols[k] = acc.take();
        }
        ops += local;
    };

    const int workers = std::max(1, threads);
    for (int d = 1; d <= g.max_depth(); ++d) {
        const auto& level = g.levels()[d];
        std::size_t chunks = std::min<std::size_t>(workers, level.size());
        if (chunks <= 1) {
            run(level, 0, level.size());
            continue;
        }
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(chunks);
        std::size_t per = (level.size() + chunks - 1) / chunks;
        for (std::size_t c = 0; c < chunks; ++c) {
            std::size_t b = c * per, e = std::min(level.size(), b + per);
            pool.emplace_back([&, b, e, c] {
                try {
                    run(level, b, e);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    if (stats) {
        stats->ops = ops.load();
        stats->levels = g.max_depth() + 1;
    }
    return assemble(m, std::move(cols));
}

namespace {

void pathsum_walk(const SeminormalModule& m, const Path& walk, std::size_t step, int here, const Scalar& w,
                  std::map<int, Scalar>& out) {
    if (step == walk.labels.size()) {
        auto it = out.find(here);
        if (it == out.end())
            out.emplace(here, w);
        else
            it->second += w;
        return;
    }
    const int i = walk.labels[step];
    const Scalar& a = m.a(here, i);
    if (!a.is_zero()) pathsum_walk(m, walk, step + 1, here, w * a, out);
    int next = m.graph().neighbor(here, i);
    if (next >= 0) {
        Scalar move = m.weights().off() + a;
        if (!move.is_zero()) pathsum_walk(m, walk, step + 1, next, w * move, out);
    }
}

}  // namespace

SparseColumn pathsum_column(const SeminormalModule& m, const Path& walk) {
    if (walk.start != 0) throw PreconditionError("path sums start at the column reading tableau");
    std::map<int, Scalar> acc;
    pathsum_walk(m, walk, 0, 0, one(m.field()), acc);
    SparseColumn c;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) c.emplace_back(k, std::move(v));
    return c;
}

Matrix transition_pathsum(const SeminormalModule& m, int max_n) {
    if (m.n() > max_n)
        throw PreconditionError("path-sum oracle limited to n <= " + std::to_string(max_n) + " (exponential subpath count)");
    std::vector<SparseColumn> cols(m.dim());
    for (int k = 0; k < m.dim(); ++k) cols[k] = pathsum_column(m, m.graph().shortest_path(0, k));
    return assemble(m, std::move(cols));
}

SparseColumn transition_column_word(const SeminormalModule& m, const std::vector<Matrix>& generators, int node) {
    std::vector<int> word = reduced_word(m.graph().node(node).word());
    SparseColumn v{{0, one(m.field())}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = young::apply(generators.at(*it), v);
    return v;
}

SparseColumn transition_column_word(const SeminormalModule& m, int node) {
    std::vector<Matrix> gens(std::max(1, m.n()));
    for (int i = 1; i < m.n(); ++i) gens[i] = seminormal_generator(m, i);
    return transition_column_word(m, gens, node);
}

Matrix transition_word(const SeminormalModule& m) {
    std::vector<Matrix> gens(std::max(1, m.n()));
    for (int i = 1; i < m.n(); ++i) gens[i] = seminormal_generator(m, i);
    std::vector<SparseColumn> cols(m.dim());
    for (int k = 0; k < m.dim(); ++k) cols[k] = transition_column_word(m, gens, k);
    return assemble(m, std::move(cols));
}

std::vector<Scalar> diagonal_closed_form(const SeminormalModule& m) {
    std::vector<Scalar> d;
    const Scalar& off = m.weights().off();
    for (const auto& t : m.graph().nodes()) {
        Scalar p = one(m.field());
        for (const auto& [i, j] : t.inversions()) p *= off + m.weights().a(t, i, j);
        d.push_back(std::move(p));
    }
    return d;
}

std::vector<Scalar> orthogonal_diag_squared(const SeminormalModule& m) {
    std::vector<Scalar> d;
    const Scalar& off = m.weights().off();
    const Scalar off2 = off * off;
    for (const auto& t : m.graph().nodes()) {
        Scalar p = one(m.field());
        for (const auto& [i, j] : t.inversions()) {
            const Scalar& a = m.weights().a(t, i, j);
            Scalar radicand = off2 - a * a;
            if (radicand.is_zero()) throw DegenerateWeight("vanishing radicand in the orthogonal normalisation");
            Scalar s = off + a;
            p *= s * s / radicand;
        }
        d.push_back(std::move(p));
    }
    return d;
}

std::vector<OrthogonalFailure> check_orthogonal(const SeminormalModule& m, const std::vector<Scalar>& d2) {
    std::vector<OrthogonalFailure> out;
    const Scalar& off = m.weights().off();
    const Scalar off2 = off * off;
    for (const auto& e : m.graph().edges()) {
        const Scalar& a = m.a(e.lower, e.label);
        Scalar up = off + a;
        Scalar radicand = off2 - a * a;
        if (up * up * d2[e.lower] != radicand * d2[e.upper]) out.push_back({e, "step"});
        Scalar m_up = up * up * d2[e.lower] / d2[e.upper];
        if (m_up != radicand) out.push_back({e, "entry_squared"});
        if (off.is_one()) {
            Scalar down = off + m.a(e.upper, e.label);
            Scalar m_down = down * down * d2[e.upper] / d2[e.lower];
            if (m_down != m_up) out.push_back({e, "symmetric"});
        }
    }
    return out;
}

StructureReport check_structure(const BruhatGraph& g, const Matrix& a) {
    StructureReport r;
    if (a.rows() != g.size() || a.cols() != g.size()) throw PreconditionError("matrix does not match the graph");
    r.upper_triangular = a.is_upper_triangular();
    for (int t = 0; t < a.cols(); ++t)
        for (const auto& [s, v] : a.column(t)) {
            if (!bruhat_leq(g.node(s).word(), g.node(t).word())) r.bruhat_support = false;
            if (s != t && g.depth(s) == g.depth(t)) r.depth_blocks_diagonal = false;
        }
    return r;
}

namespace {

void alphabets(std::vector<int>& counts, std::vector<int>& cur, int n, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) continue;
        --counts[k];
        cur.push_back(static_cast<int>(k));
        alphabets(counts, cur, n, out);
        cur.pop_back();
        ++counts[k];
    }
}

}  // namespace

GrnTransition grn_transition(const ShapePtr& shape) {
    if (!shape->is_multipartition()) throw PreconditionError("grn_transition needs components without inner partitions");
    const int r = shape->r();
    const int n = shape->n();
    std::vector<Matrix> comp_a;
    std::vector<std::vector<Tableau>> comp_t;
    std::vector<int> counts;
    for (int k = 0; k < r; ++k) {
        const auto& c = shape->components()[k];
        counts.push_back(c.size());
        if (c.size() == 0) {
            comp_a.push_back(Matrix::identity(1, FieldDesc::rational()));
            comp_t.push_back({Tableau()});
            continue;
        }
        SeminormalModule mod(AlgebraSpec::symmetric(), Shape::partition(c.outer));
        comp_a.push_back(transition_recursive(mod));
        comp_t.push_back(mod.graph().nodes());
    }
    Matrix block = comp_a[0];
    for (int k = 1; k < r; ++k) block = tensor_product(block, comp_a[k]);
    block.basis.clear();

    std::vector<std::vector<int>> labels;
    std::vector<int> cur;
    alphabets(counts, cur, n, labels);
    struct Alphabet {
        std::vector<std::vector<int>> letters;
        Permutation beta;
        int length;
    };
    std::vector<Alphabet> alph;
    for (const auto& lab : labels) {
        Alphabet a;
        a.letters.resize(r);
        for (int v = 1; v <= n; ++v) a.letters[lab[v - 1]].push_back(v);
        for (const auto& l : a.letters) a.beta.insert(a.beta.end(), l.begin(), l.end());
        a.length = permutation_length(a.beta);
        alph.push_back(std::move(a));
    }
    std::sort(alph.begin(), alph.end(), [](const Alphabet& x, const Alphabet& y) {
        return x.length != y.length ? x.length < y.length : x.beta < y.beta;
    });

    // Position of every box of the full shape inside its component's column reading order.
    std::vector<int> local(n);
    std::vector<int> seen(r, 0);
    for (int b = 0; b < n; ++b) local[b] = seen[shape->box(b).comp]++;

    GrnTransition out;
    std::vector<int> idx(r, 0);
    for (const auto& a : alph) {
        std::fill(idx.begin(), idx.end(), 0);
        for (int count = 0; count < block.cols(); ++count) {
            std::vector<int> e(n);
            for (int b = 0; b < n; ++b) {
                int k = shape->box(b).comp;
                e[b] = a.letters[k][comp_t[k][idx[k]].entry(local[b]) - 1];
            }
            out.basis.emplace_back(shape, std::move(e));
            for (int k = r - 1; k >= 0; --k) {
                if (++idx[k] < static_cast<int>(comp_t[k].size())) break;
                idx[k] = 0;
            }
        }
    }
    out.matrix = direct_sum(std::vector<Matrix>(alph.size(), block));
    for (const auto& t : out.basis) out.matrix.basis.push_back(t.word_string());
    return out;
}

std::vector<int> GrnTransition::canonical_positions(const BruhatGraph& g) const {
    std::map<std::string, int> pos;
    for (std::size_t p = 0; p < basis.size(); ++p) pos.emplace(basis[p].key(), static_cast<int>(p));
    std::vector<int> order;
    for (const auto& t : g.nodes()) {
        auto it = pos.find(t.key());
        if (it == pos.end()) throw InvariantError("canonical tableau missing from the alphabet basis");
        order.push_back(it->second);
    }
    return order;
}

Matrix GrnTransition::in_canonical_order(const BruhatGraph& g) const { return matrix.permuted(canonical_positions(g)); }

}  // namespace young
