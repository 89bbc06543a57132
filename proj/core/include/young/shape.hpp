#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "young/field.hpp"

namespace young {

using Partition = std::vector<int>;

struct Box {
    int comp = 0;
    int row = 0;  // 0-based within the outer partition
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Box&, const Box&) = default;
};

struct Component {
    Partition outer;
    Partition inner;  // padded with zeros to outer.size()
    std::optional<Scalar> page_weight;
    int size() const;
};

// A skew shape or an r-tuple of skew shapes. Boxes are numbered in column
// reading order: component 1 first, columns left to right, each column top to bottom.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Component> comps);
    static Shape partition(const Partition& p) { return Shape({Component{p, {}, std::nullopt}}); }
    // "3,2,1", "3,3,1/2,1", "(2,1)|(1)", "(3,2/1)|(2)", optional "@w1,w2" page weights.
    static Shape parse(std::string_view s);

    int n() const { return n_; }
    int r() const { return static_cast<int>(comps_.size()); }
    const std::vector<Component>& components() const { return comps_; }
    bool has_page_weights() const;
    bool is_multipartition() const;  // every inner partition empty

    const std::vector<Box>& boxes() const { return boxes_; }
    const Box& box(int b) const { return boxes_[b]; }
    int index_of(int comp, int row, int col) const;  // -1 if absent
    int right_of(int b) const { return right_[b]; }
    int below_of(int b) const { return below_[b]; }

    std::string to_string() const;
    friend bool operator==(const Shape& a, const Shape& b) { return a.to_string() == b.to_string(); }

private:
    std::vector<Component> comps_;
    std::vector<Box> boxes_;
    std::vector<int> right_, below_;
    std::vector<std::vector<std::vector<int>>> grid_;  // comp, row, col -> box or -1
    int n_ = 0;
};

// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

using Permutation = std::vector<int>;  // one-line notation, values 1..n

int permutation_length(const Permutation& w);  // inversion count by adjacent transpositions
// Left-reduced word (j_1, ..., j_k) with w = s_{j_1} ... s_{j_k}.
std::vector<int> reduced_word(const Permutation& w);
Permutation compose(const Permutation& a, const Permutation& b);  // (a b)(x) = a(b(x))
Permutation inverse(const Permutation& w);

}  // namespace young
