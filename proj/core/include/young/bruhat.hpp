#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "young/tableau.hpp"

namespace young {

struct Edge {
    int lower = 0;  // node index, depth d
    int upper = 0;  // node index, depth d + 1
    int label = 0;  // upper = s_label(lower)
};

struct Path {
    int start = 0;
    std::vector<int> labels;
    std::vector<int> nodes;  // start followed by one node per label
    int end() const { return nodes.back(); }
    int length() const { return static_cast<int>(labels.size()); }
};

// Weak Bruhat graph on the standard tableaux of one shape, nodes in canonical order:
// node 0 is the column reading tableau and the last node the row reading tableau.
class BruhatGraph {
public:
    explicit BruhatGraph(ShapePtr shape);

    const Shape& shape() const { return *shape_; }
    const ShapePtr& shape_ptr() const { return shape_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    int n() const { return shape_->n(); }
    const std::vector<Tableau>& nodes() const { return nodes_; }
    const Tableau& node(int k) const { return nodes_[k]; }
    int depth(int k) const { return depth_[k]; }
    int max_depth() const { return levels_.empty() ? 0 : static_cast<int>(levels_.size()) - 1; }
    const std::vector<std::vector<int>>& levels() const { return levels_; }
    int index_of(const Tableau& t) const;  // -1 when t is not a node
    // Node s_i(k), or -1 when s_i(k) is nonstandard.
    int neighbor(int k, int i) const { return nbr_[static_cast<std::size_t>(k) * stride_ + (i - 1)]; }
    std::vector<Edge> edges() const;

    // Lexicographically smallest label sequence among the shortest upward paths.
    Path shortest_path(int from, int to) const;
    std::string to_dot() const;

private:
    ShapePtr shape_;
    std::vector<Tableau> nodes_;
    std::vector<int> depth_;
    std::vector<std::vector<int>> levels_;
    std::vector<int> nbr_;
    std::size_t stride_ = 0;
    std::unordered_map<std::string, int> index_;
};

// Strong Bruhat order by the sorted-prefix dominance criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

struct Subpath {
    std::vector<bool> moves;  // per label: true = step along the edge, false = wait
    std::vector<int> nodes;   // visited nodes, start first
    int end() const { return nodes.back(); }
};

// Every subpath of p, with all visited tableaux standard, that ends at target.
std::vector<Subpath> subpaths_terminating(const BruhatGraph& g, const Path& p, int target);

}  // namespace young
