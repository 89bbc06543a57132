#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "young/young.hpp"

namespace support {

young::ShapePtr shape(std::string_view s);

// "145/2/3": rows separated by '/', components by '|', one digit per entry.
// With spaces present ("1 2 10/3 4") entries are space separated. '.' marks an inner box.
young::Tableau tableau(const young::ShapePtr& sh, std::string_view label);

young::Matrix rationals(const std::vector<std::vector<std::string>>& rows);
young::Matrix evaluate_q(const young::Matrix& a, const young::Rational& q0);
std::vector<std::vector<young::Rational>> dense_rationals(const young::Matrix& a);

// The matrix re-indexed by the given tableau labels, in their order.
young::Matrix in_label_order(const young::Matrix& a, const young::BruhatGraph& g, const std::vector<std::string>& labels);

std::vector<young::ShapePtr> partitions(int n);
// lambda/mu with |lambda/mu| = n and 1 <= |mu| <= max_inner.
std::vector<young::ShapePtr> skew_shapes(int n, int max_inner);
// Every r-partition of n, empty components included.
std::vector<young::ShapePtr> multipartitions(int n, int r);
// Partitions and skew shapes with 1 <= |shape| <= n.
std::vector<young::ShapePtr> shapes_up_to(int n, int max_inner = 2);

}  // namespace support

namespace young {

// Readable values in test failure messages.
inline void PrintTo(const Scalar& x, std::ostream* os) { *os << x.to_string() << " [" << x.field().name() << "]"; }
inline void PrintTo(const Matrix& a, std::ostream* os) {
    *os << a.rows() << "x" << a.cols() << " " << a.field().name();
    for (const auto& row : a.dense()) {
        *os << "\n   ";
        for (const auto& v : row) *os << " " << v.to_string();
    }
}

}  // namespace young
