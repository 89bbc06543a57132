#include "young/shape.hpp"

#include <algorithm>
#include <cctype>

#include "young/errors.hpp"

namespace young {

int Component::size() const {
    int s = 0;
    for (std::size_t i = 0; i < outer.size(); ++i) s += outer[i] - (i < inner.size() ? inner[i] : 0);
    return s;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

Partition parse_partition(std::string_view s, std::string_view whole) {
    s = strip(s);
    Partition p;
    if (s.empty() || s == "0" || s == "\xE2\x88\x85") return p;  // "∅"
    for (auto part : split(s, ',')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("invalid partition part '" + std::string(part) + "' in shape '" + std::string(whole) + "'");
        if (part.size() > 3) throw ParseError("partition part too large in '" + std::string(whole) + "'");
        p.push_back(std::stoi(std::string(part)));
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw ParseError("partition parts must be positive in '" + std::string(whole) + "'");
        if (i > 0 && p[i] > p[i - 1]) throw ParseError("partition must be weakly decreasing in '" + std::string(whole) + "'");
    }
    return p;
}

Component parse_component(std::string_view s, std::string_view whole) {
    auto parts = split(s, '/');
    if (parts.size() > 2) throw ParseError("too many '/' in shape '" + std::string(whole) + "'");
    Component c;
    c.outer = parse_partition(parts[0], whole);
    if (parts.size() == 2) c.inner = parse_partition(parts[1], whole);
    return c;
}

Scalar parse_weight(std::string_view s) {
    if (s.find('q') != std::string_view::npos) return Scalar(QRational::parse(s));
    return Scalar(parse_rational(s));
}

std::string join(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out;
}

std::string weight_string(const Scalar& w) {
    if (w.field().kind == FieldKind::q && w.qrational().den() == Laurent(1)) return w.qrational().num().to_string();
    return w.to_string();
}

}  // namespace

Shape::Shape(std::vector<Component> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw ParseError("shape has no components");
    for (auto& c : comps_) {
        while (!c.inner.empty() && c.inner.back() == 0) c.inner.pop_back();
        if (c.inner.size() > c.outer.size()) throw ParseError("inner partition longer than outer partition");
        for (std::size_t i = 0; i < c.inner.size(); ++i)
            if (c.inner[i] > c.outer[i]) throw ParseError("inner partition not contained in outer partition");
        for (std::size_t i = 1; i < c.outer.size(); ++i)
            if (c.outer[i] > c.outer[i - 1]) throw ParseError("outer partition must be weakly decreasing");
        for (std::size_t i = 1; i < c.inner.size(); ++i)
            if (c.inner[i] > c.inner[i - 1]) throw ParseError("inner partition must be weakly decreasing");
        c.inner.resize(c.outer.size(), 0);
        n_ += c.size();
    }
    if (n_ > 64) throw PreconditionError("shapes with more than 64 boxes are not supported");
    std::size_t weighted = std::count_if(comps_.begin(), comps_.end(), [](const Component& c) { return c.page_weight.has_value(); });
    if (weighted != 0 && weighted != comps_.size()) throw ParseError("page weights must be given for every component or none");

    grid_.resize(comps_.size());
    for (int k = 0; k < r(); ++k) {
        const auto& c = comps_[k];
        grid_[k].resize(c.outer.size());
        for (std::size_t x = 0; x < c.outer.size(); ++x) grid_[k][x].assign(c.outer[x], -1);
        int width = c.outer.empty() ? 0 : c.outer[0];
        for (int y = 0; y < width; ++y)
            for (std::size_t x = 0; x < c.outer.size(); ++x)
                if (y < c.outer[x] && y >= c.inner[x]) {
                    grid_[k][x][y] = static_cast<int>(boxes_.size());
                    boxes_.push_back({k, static_cast<int>(x), y});
                }
    }
    right_.resize(boxes_.size());
    below_.resize(boxes_.size());
    for (std::size_t b = 0; b < boxes_.size(); ++b) {
        const Box& bx = boxes_[b];
        right_[b] = index_of(bx.comp, bx.row, bx.col + 1);
        below_[b] = index_of(bx.comp, bx.row + 1, bx.col);
    }
}

int Shape::index_of(int comp, int row, int col) const {
    if (comp < 0 || comp >= r() || row < 0 || col < 0) return -1;
    const auto& g = grid_[comp];
    if (row >= static_cast<int>(g.size()) || col >= static_cast<int>(g[row].size())) return -1;
    return g[row][col];
}

bool Shape::has_page_weights() const { return comps_.front().page_weight.has_value(); }

bool Shape::is_multipartition() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) {
        return std::all_of(c.inner.begin(), c.inner.end(), [](int v) { return v == 0; });
    });
}

Shape Shape::parse(std::string_view text) {
    std::string_view s = strip(text);
    std::vector<Scalar> weights;
    if (auto at = s.find('@'); at != std::string_view::npos) {
        for (auto w : split(s.substr(at + 1), ',')) {
            if (w.empty()) throw ParseError("empty page weight in '" + std::string(text) + "'");
            weights.push_back(parse_weight(w));
        }
        s = strip(s.substr(0, at));
    }
    if (s.empty()) throw ParseError("empty shape");
    std::vector<Component> comps;
    if (s.front() == '(') {
        for (auto part : split(s, '|')) {
            if (part.size() < 2 || part.front() != '(' || part.back() != ')')
                throw ParseError("expected parenthesized component in '" + std::string(text) + "'");
            comps.push_back(parse_component(part.substr(1, part.size() - 2), text));
        }
    } else {
        if (s.find('|') != std::string_view::npos) throw ParseError("components must be parenthesized in '" + std::string(text) + "'");
        comps.push_back(parse_component(s, text));
    }
    if (!weights.empty()) {
        if (weights.size() != comps.size()) throw ParseError("number of page weights does not match number of components");
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (weights[k].is_zero()) throw ParseError("page weights must be nonzero");
            comps[k].page_weight = weights[k];
        }
    }
    Shape sh(std::move(comps));
    if (sh.n() == 0) throw ParseError("shape has no boxes");
    return sh;
}

std::string Shape::to_string() const {
    auto comp_str = [](const Component& c) {
        std::string s = join(c.outer);
        Partition in = c.inner;
        while (!in.empty() && in.back() == 0) in.pop_back();
        if (!in.empty()) s += "/" + join(in);
        return s;
    };
    std::string out;
    if (r() == 1) {
        out = comp_str(comps_[0]);
    } else {
        for (int k = 0; k < r(); ++k) out += (k ? "|(" : "(") + comp_str(comps_[k]) + ")";
    }
    if (has_page_weights()) {
        out += "@";
        for (int k = 0; k < r(); ++k) out += (k ? "," : "") + weight_string(*comps_[k].page_weight);
    }
    return out;
}

namespace {

void partitions_rec(int left, int cap, Partition& cur, std::vector<Partition>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(left - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    if (n >= 1) partitions_rec(n, n, cur, out);
    return out;
}

int permutation_length(const Permutation& w) {
    Permutation v = w;
    int count = 0;
    for (std::size_t pass = 0; pass < v.size(); ++pass)
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                ++count;
            }
    return count;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Left multiplication by s_i swaps the values i and i+1; it shortens w iff i+1 precedes i.
    const int n = static_cast<int>(w.size());
    std::vector<int> pos(n + 2);
    for (int p = 0; p < n; ++p) pos[w[p]] = p;
    std::vector<int> word;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i < n; ++i)
            if (pos[i + 1] < pos[i]) {
                std::swap(pos[i], pos[i + 1]);
                word.push_back(i);
                changed = true;
                break;
            }
    }
    return word;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw PreconditionError("permutation sizes differ");
    Permutation c(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x] - 1];
    return c;
}

Permutation inverse(const Permutation& w) {
    Permutation v(w.size());
    for (std::size_t x = 0; x < w.size(); ++x) v[w[x] - 1] = static_cast<int>(x) + 1;
    return v;
}

}  // namespace young
