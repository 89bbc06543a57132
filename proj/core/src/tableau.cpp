#include "young/tableau.hpp"

#include <algorithm>

#include "young/errors.hpp"

namespace young {

Tableau::Tableau(ShapePtr shape, std::vector<int> entry_at_box) : shape_(std::move(shape)), entry_(std::move(entry_at_box)) {
    const int n = shape_->n();
    if (static_cast<int>(entry_.size()) != n) throw PreconditionError("filling size does not match shape");
    pos_.assign(n, -1);
    for (int b = 0; b < n; ++b) {
        int v = entry_[b];
        if (v < 1 || v > n || pos_[v - 1] != -1) throw PreconditionError("filling is not a bijection onto 1..n");
        pos_[v - 1] = b;
    }
}

Tableau Tableau::from_rows(ShapePtr shape, const std::vector<std::vector<std::vector<int>>>& rows) {
    std::vector<int> entries(shape->n(), 0);
    if (static_cast<int>(rows.size()) != shape->r()) throw ParseError("tableau has the wrong number of components");
    for (int k = 0; k < shape->r(); ++k) {
        const auto& c = shape->components()[k];
        if (rows[k].size() != c.outer.size()) throw ParseError("tableau row count does not match shape");
        for (std::size_t x = 0; x < rows[k].size(); ++x) {
            if (static_cast<int>(rows[k][x].size()) != c.outer[x]) throw ParseError("tableau row length does not match shape");
            for (std::size_t y = 0; y < rows[k][x].size(); ++y) {
                int b = shape->index_of(k, static_cast<int>(x), static_cast<int>(y));
                if (b < 0) {
                    if (rows[k][x][y] != 0) throw ParseError("entry inside the inner partition");
                    continue;
                }
                entries[b] = rows[k][x][y];
            }
        }
    }
    return Tableau(std::move(shape), std::move(entries));
}

bool Tableau::is_standard() const {
    for (int b = 0; b < n(); ++b) {
        int rb = shape_->right_of(b), db = shape_->below_of(b);
        if (rb >= 0 && entry_[rb] <= entry_[b]) return false;
        if (db >= 0 && entry_[db] <= entry_[b]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> Tableau::inversions() const {
    std::vector<std::pair<int, int>> inv;
    for (int i = 2; i <= n(); ++i) {
        const Box& bi = box_of(i);
        for (int j = 1; j < i; ++j) {
            const Box& bj = box_of(j);
            if (bi.comp < bj.comp || (bi.comp == bj.comp && bi.row > bj.row && bi.col < bj.col)) inv.emplace_back(i, j);
        }
    }
    return inv;
}

int Tableau::depth() const {
    int d = 0;
    for (int i = 2; i <= n(); ++i) {
        const Box& bi = box_of(i);
        for (int j = 1; j < i; ++j) {
            const Box& bj = box_of(j);
            if (bi.comp < bj.comp || (bi.comp == bj.comp && bi.row > bj.row && bi.col < bj.col)) ++d;
        }
    }
    return d;
}

Tableau Tableau::apply(const Permutation& sigma) const {
    if (static_cast<int>(sigma.size()) != n()) throw PreconditionError("permutation size does not match tableau");
    std::vector<int> e(entry_.size());
    for (std::size_t b = 0; b < e.size(); ++b) e[b] = sigma[entry_[b] - 1];
    return Tableau(shape_, std::move(e));
}

Tableau Tableau::swapped(int i) const {
    if (i < 1 || i >= n()) throw PreconditionError("generator index out of range");
    Tableau t(*this);
    std::swap(t.entry_[pos_[i - 1]], t.entry_[pos_[i]]);
    std::swap(t.pos_[i - 1], t.pos_[i]);
    return t;
}

bool Tableau::swap_is_standard(int i) const {
    const Box& a = box_of(i);
    const Box& b = box_of(i + 1);
    return a.comp != b.comp || (a.row != b.row && a.col != b.col);
}

Permutation Tableau::alphabetizer() const {
    if (!shape_->is_multipartition()) throw PreconditionError("alphabetizers require a shape without inner partitions");
    std::vector<std::vector<int>> alphabet(shape_->r());
    for (int b = 0; b < n(); ++b) alphabet[shape_->box(b).comp].push_back(entry_[b]);
    Permutation beta;
    for (auto& a : alphabet) {
        std::sort(a.begin(), a.end());
        beta.insert(beta.end(), a.begin(), a.end());
    }
    return beta;
}

Tableau Tableau::component_standardized(int k) const {
    Component c = shape_->components().at(k);
    c.page_weight.reset();
    auto sub = std::make_shared<const Shape>(std::vector<Component>{c});
    std::vector<int> vals;
    for (int b = 0; b < n(); ++b)
        if (shape_->box(b).comp == k) vals.push_back(entry_[b]);
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    for (auto& v : vals) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    // Boxes of component k appear in the same relative order in both shapes.
    return Tableau(std::move(sub), std::move(vals));
}

std::vector<std::vector<std::vector<int>>> Tableau::rows() const {
    std::vector<std::vector<std::vector<int>>> out(shape_->r());
    for (int k = 0; k < shape_->r(); ++k) {
        const auto& c = shape_->components()[k];
        out[k].resize(c.outer.size());
        for (std::size_t x = 0; x < c.outer.size(); ++x) {
            out[k][x].assign(c.outer[x], 0);
            for (int y = 0; y < c.outer[x]; ++y) {
                int b = shape_->index_of(k, static_cast<int>(x), y);
                if (b >= 0) out[k][x][y] = entry_[b];
            }
        }
    }
    return out;
}

std::string Tableau::word_string() const {
    std::string s;
    for (std::size_t p = 0; p < entry_.size(); ++p) {
        if (n() >= 10 && p > 0) s += ' ';
        s += std::to_string(entry_[p]);
    }
    return s;
}

Tableau column_reading(const ShapePtr& shape) {
    std::vector<int> e(shape->n());
    for (int b = 0; b < shape->n(); ++b) e[b] = b + 1;
    return Tableau(shape, std::move(e));
}

Tableau row_reading(const ShapePtr& shape) {
    std::vector<int> e(shape->n());
    int next = 1;
    for (int k = shape->r() - 1; k >= 0; --k) {
        const auto& c = shape->components()[k];
        for (std::size_t x = 0; x < c.outer.size(); ++x)
            for (int y = c.inner[x]; y < c.outer[x]; ++y) e[shape->index_of(k, static_cast<int>(x), y)] = next++;
    }
    return Tableau(shape, std::move(e));
}

bool canonical_less(const Tableau& a, const Tableau& b) {
    int da = a.depth(), db = b.depth();
    if (da != db) return da < db;
    const auto& wa = a.word();
    const auto& wb = b.word();
    for (std::size_t p = wa.size(); p-- > 0;)
        if (wa[p] != wb[p]) return wa[p] > wb[p];
    return false;
}

namespace {

void place(const Shape& sh, std::vector<int>& filling, int v, std::vector<std::vector<int>>& out) {
    if (v == 0) {
        out.push_back(filling);
        return;
    }
    for (int b = 0; b < sh.n(); ++b) {
        if (filling[b] != 0) continue;
        int rb = sh.right_of(b), db = sh.below_of(b);
        if ((rb >= 0 && filling[rb] == 0) || (db >= 0 && filling[db] == 0)) continue;
        filling[b] = v;
        place(sh, filling, v - 1, out);
        filling[b] = 0;
    }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const ShapePtr& shape) {
    std::vector<std::vector<int>> fillings;
    std::vector<int> filling(shape->n(), 0);
    place(*shape, filling, shape->n(), fillings);
    std::vector<std::pair<int, Tableau>> keyed;
    keyed.reserve(fillings.size());
    for (auto& f : fillings) {
        Tableau t(shape, std::move(f));
        int d = t.depth();
        keyed.emplace_back(d, std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        const auto& wa = a.second.word();
        const auto& wb = b.second.word();
        for (std::size_t p = wa.size(); p-- > 0;)
            if (wa[p] != wb[p]) return wa[p] > wb[p];
        return false;
    });
    std::vector<Tableau> out;
    out.reserve(keyed.size());
    for (auto& kt : keyed) out.push_back(std::move(kt.second));
    return out;
}

}  // namespace young
