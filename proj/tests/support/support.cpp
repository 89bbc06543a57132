#include "support/support.hpp"

#include <sstream>

namespace support {

using namespace young;

ShapePtr shape(std::string_view s) { return std::make_shared<const Shape>(Shape::parse(s)); }

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Tableau tableau(const ShapePtr& sh, std::string_view label) {
    bool spaced = label.find(' ') != std::string_view::npos;
    std::vector<std::vector<std::vector<int>>> rows;
    for (const auto& comp : split(label, '|')) {
        std::vector<std::vector<int>> c;
        if (!comp.empty())
            for (const auto& row : split(comp, '/')) {
                std::vector<int> r;
                if (spaced) {
                    std::istringstream in(row);
                    std::string tok;
                    while (in >> tok) r.push_back(tok == "." ? 0 : std::stoi(tok));
                } else {
                    for (char ch : row) r.push_back(ch == '.' ? 0 : ch - '0');
                }
                c.push_back(r);
            }
        rows.push_back(c);
    }
    return Tableau::from_rows(sh, rows);
}

Matrix rationals(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> d;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (const auto& v : row) r.push_back(Scalar::parse(v, FieldDesc::rational()));
        d.push_back(r);
    }
    return Matrix::from_dense(d, FieldDesc::rational());
}

Matrix evaluate_q(const Matrix& a, const Rational& q0) {
    return a.map([&](const Scalar& x) { return Scalar(x.qrational().eval(q0)); }, FieldDesc::rational());
}

std::vector<std::vector<Rational>> dense_rationals(const Matrix& a) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : a.dense()) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(v.rational());
        out.push_back(r);
    }
    return out;
}

Matrix in_label_order(const Matrix& a, const BruhatGraph& g, const std::vector<std::string>& labels) {
    std::vector<int> order;
    for (const auto& l : labels) {
        int k = g.index_of(tableau(g.shape_ptr(), l));
        if (k < 0) throw std::runtime_error("label " + l + " is not a standard tableau of " + g.shape().to_string());
        order.push_back(k);
    }
    return a.permuted(order);
}

std::vector<ShapePtr> partitions(int n) {
    std::vector<ShapePtr> out;
    for (const auto& p : partitions_of(n)) out.push_back(std::make_shared<const Shape>(Shape::partition(p)));
    return out;
}

namespace {

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace

std::vector<ShapePtr> skew_shapes(int n, int max_inner) {
    std::vector<ShapePtr> out;
    for (int m = 1; m <= max_inner; ++m)
        for (const auto& mu : partitions_of(m))
            for (const auto& lambda : partitions_of(n + m))
                if (contains(lambda, mu)) out.push_back(std::make_shared<const Shape>(Shape({Component{lambda, mu, std::nullopt}})));
    return out;
}

namespace {

void compositions(int left, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= left; ++k) {
        cur.push_back(k);
        compositions(left - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ShapePtr> multipartitions(int n, int r) {
    std::vector<std::vector<int>> sizes;
    std::vector<int> cur;
    compositions(n, r, cur, sizes);
    std::vector<ShapePtr> out;
    for (const auto& sz : sizes) {
        std::vector<std::vector<Partition>> choices;
        for (int s : sz) choices.push_back(s == 0 ? std::vector<Partition>{Partition{}} : partitions_of(s));
        std::vector<std::size_t> idx(r, 0);
        while (true) {
            std::vector<Component> comps;
            for (int k = 0; k < r; ++k) comps.push_back(Component{choices[k][idx[k]], {}, std::nullopt});
            out.push_back(std::make_shared<const Shape>(Shape(comps)));
            int k = r - 1;
            while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
            if (k < 0) break;
        }
    }
    return out;
}

std::vector<ShapePtr> shapes_up_to(int n, int max_inner) {
    std::vector<ShapePtr> out;
    for (int m = 1; m <= n; ++m) {
        for (auto& s : partitions(m)) out.push_back(s);
        for (auto& s : skew_shapes(m, max_inner)) out.push_back(s);
    }
    return out;
}

}  // namespace support
