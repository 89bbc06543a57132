#include "young/bruhat.hpp"

#include <algorithm>
#include <deque>

#include "young/errors.hpp"

namespace young {

BruhatGraph::BruhatGraph(ShapePtr shape) : shape_(std::move(shape)), nodes_(enumerate_syt(shape_)) {
    const int n = shape_->n();
    stride_ = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
    index_.reserve(nodes_.size());
    for (int k = 0; k < size(); ++k) index_.emplace(nodes_[k].key(), k);
    depth_.resize(nodes_.size());
    for (int k = 0; k < size(); ++k) {
        depth_[k] = nodes_[k].depth();
        if (depth_[k] >= static_cast<int>(levels_.size())) levels_.resize(depth_[k] + 1);
        levels_[depth_[k]].push_back(k);
    }
    nbr_.assign(nodes_.size() * stride_, -1);
    for (int k = 0; k < size(); ++k)
        for (int i = 1; i < n; ++i)
            if (nodes_[k].swap_is_standard(i)) {
                int j = index_of(nodes_[k].swapped(i));
                if (j < 0) throw InvariantError("standard neighbour missing from enumeration");
                nbr_[static_cast<std::size_t>(k) * stride_ + (i - 1)] = j;
            }
}

int BruhatGraph::index_of(const Tableau& t) const {
    auto it = index_.find(t.key());
    return it == index_.end() ? -1 : it->second;
}

std::vector<Edge> BruhatGraph::edges() const {
    std::vector<Edge> out;
    for (int k = 0; k < size(); ++k)
        for (int i = 1; i < n(); ++i) {
            int j = neighbor(k, i);
            if (j >= 0 && depth_[j] == depth_[k] + 1) out.push_back({k, j, i});
        }
    return out;
}

Path BruhatGraph::shortest_path(int from, int to) const {
    if (from < 0 || from >= size() || to < 0 || to >= size()) throw PreconditionError("path endpoint out of range");
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<int> queue{to};
    dist[to] = 0;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int i = 1; i < n(); ++i) {
            int j = neighbor(k, i);
            if (j >= 0 && dist[j] < 0) {
                dist[j] = dist[k] + 1;
                queue.push_back(j);
            }
        }
    }
    if (dist[from] != depth_[to] - depth_[from])
        throw PreconditionError("target is not above the start in weak order");
    Path p;
    p.start = from;
    p.nodes.push_back(from);
    for (int k = from; k != to;) {
        for (int i = 1; i < n(); ++i) {
            int j = neighbor(k, i);
            if (j >= 0 && dist[j] == dist[k] - 1) {
                p.labels.push_back(i);
                p.nodes.push_back(j);
                k = j;
                break;
            }
        }
    }
    return p;
}

namespace {

std::string dot_label(const Tableau& t) {
    std::string s;
    auto rows = t.rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k) s += "\\n|\\n";
        if (rows[k].empty()) s += "()";
        for (std::size_t x = 0; x < rows[k].size(); ++x) {
            if (x) s += "\\n";
            for (std::size_t y = 0; y < rows[k][x].size(); ++y) {
                if (y) s += " ";
                s += rows[k][x][y] ? std::to_string(rows[k][x][y]) : ".";
            }
        }
    }
    return s;
}

}  // namespace

std::string BruhatGraph::to_dot() const {
    std::string s = "graph weak_bruhat {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (int k = 0; k < size(); ++k)
        s += "  t" + std::to_string(k) + " [label=\"" + dot_label(nodes_[k]) + "\"];\n";
    for (std::size_t d = 0; d < levels_.size(); ++d) {
        s += "  { rank=same;";
        for (int k : levels_[d]) s += " t" + std::to_string(k) + ";";
        s += " }\n";
    }
    for (const auto& e : edges())
        s += "  t" + std::to_string(e.lower) + " -- t" + std::to_string(e.upper) + " [label=\"s" + std::to_string(e.label) + "\"];\n";
    s += "}\n";
    return s;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw PreconditionError("permutations of different sizes");
    std::vector<int> pu, pw;
    for (std::size_t k = 0; k < u.size(); ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u[k]), u[k]);
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w[k]), w[k]);
        for (std::size_t m = 0; m <= k; ++m)
            if (pu[m] > pw[m]) return false;
    }
    return true;
}

namespace {

void walk(const BruhatGraph& g, const Path& p, int target, std::size_t step, Subpath& cur, std::vector<Subpath>& out) {
    int here = cur.nodes.back();
    if (step == p.labels.size()) {
        if (here == target) out.push_back(cur);
        return;
    }
    cur.moves.push_back(false);
    cur.nodes.push_back(here);
    walk(g, p, target, step + 1, cur, out);
    cur.moves.pop_back();
    cur.nodes.pop_back();
    int next = g.neighbor(here, p.labels[step]);
    if (next >= 0) {
        cur.moves.push_back(true);
        cur.nodes.push_back(next);
        walk(g, p, target, step + 1, cur, out);
        cur.moves.pop_back();
        cur.nodes.pop_back();
    }
}

}  // namespace

std::vector<Subpath> subpaths_terminating(const BruhatGraph& g, const Path& p, int target) {
    std::vector<Subpath> out;
    Subpath cur;
    cur.nodes.push_back(p.start);
    walk(g, p, target, 0, cur, out);
    return out;
}

}  // namespace young
