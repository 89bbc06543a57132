#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "young/shape.hpp"

namespace young {

using ShapePtr = std::shared_ptr<const Shape>;

// A bijective filling of a shape with 1..n. Standardness is a property, not an invariant,
// so that nonstandard images s_i(T) can be represented and reported.
class Tableau {
public:
    Tableau() = default;
    Tableau(ShapePtr shape, std::vector<int> entry_at_box);
    // rows[k][x][y]: entry, 0 for boxes of the inner partition.
    static Tableau from_rows(ShapePtr shape, const std::vector<std::vector<std::vector<int>>>& rows);

    const Shape& shape() const { return *shape_; }
    const ShapePtr& shape_ptr() const { return shape_; }
    int n() const { return static_cast<int>(entry_.size()); }
    int entry(int box) const { return entry_[box]; }
    int box_index(int v) const { return pos_[v - 1]; }
    const Box& box_of(int v) const { return shape_->box(pos_[v - 1]); }

    bool is_standard() const;
    // The permutation w with w(C) = T; since boxes are stored in C order this is the filling itself.
    const Permutation& word() const { return entry_; }
    std::vector<std::pair<int, int>> inversions() const;  // (i, j) with i > j, sorted
    int depth() const;
    int content(int v) const { return box_of(v).content(); }

    Tableau apply(const Permutation& sigma) const;  // entries relabeled by sigma
    Tableau swapped(int i) const;                   // s_i(T)
    bool swap_is_standard(int i) const;             // s_i(T) standard, given T standard

    // Minimal-length permutation carrying the standard alphabet to this tableau's alphabet.
    Permutation alphabetizer() const;
    // Component k with its entries replaced by their ranks.
    Tableau component_standardized(int k) const;

    std::vector<std::vector<std::vector<int>>> rows() const;
    std::string word_string() const;
    std::string key() const { return std::string(entry_.begin(), entry_.end()); }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.entry_ == b.entry_ && *a.shape_ == *b.shape_; }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }

private:
    ShapePtr shape_;
    std::vector<int> entry_;
    std::vector<int> pos_;
};

Tableau column_reading(const ShapePtr& shape);
Tableau row_reading(const ShapePtr& shape);

// Sort key: depth first, then the word read from its last letter backwards, larger letters first.
bool canonical_less(const Tableau& a, const Tableau& b);

// All standard tableaux of the shape in canonical order.
std::vector<Tableau> enumerate_syt(const ShapePtr& shape);

}  // namespace young
