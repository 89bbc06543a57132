#include "terms.hpp"

#include <cctype>

#include "young/errors.hpp"

namespace young::detail {

std::string format_terms(const std::map<int, Rational>& terms, char var) {
    std::string out;
    for (const auto& [e, c] : terms) {
        if (c == 0) continue;
        std::string t;
        if (e == 0) {
            t = to_string(c);
        } else {
            std::string v(1, var);
            if (e != 1) v += "^" + std::to_string(e);
            if (c == 1)
                t = v;
            else if (c == -1)
                t = "-" + v;
            else
                t = to_string(c) + "*" + v;
        }
        if (!out.empty() && t[0] != '-') out += '+';
        out += t;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    std::string digits() {
        skip();
        std::size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return std::string(s.substr(j, i - j));
    }
};

[[noreturn]] void fail(std::string_view s) { throw ParseError("invalid polynomial: '" + std::string(s) + "'"); }

}  // namespace

std::map<int, Rational> parse_terms(std::string_view s, char var) {
    Cursor cur{s};
    std::map<int, Rational> out;
    if (cur.done()) fail(s);
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++cur.i;
        } else if (!first) {
            fail(s);
        }
        first = false;
        Rational coeff = 1;
        bool have_coeff = false;
        std::string num = cur.digits();
        if (!num.empty()) {
            have_coeff = true;
            std::string text = num;
            if (cur.peek() == '/') {
                ++cur.i;
                std::string den = cur.digits();
                if (den.empty()) fail(s);
                text += "/" + den;
            }
            coeff = parse_rational(text);
        }
        int exponent = 0;
        if (have_coeff && cur.peek() == '*') {
            ++cur.i;
            if (cur.peek() != var) fail(s);
        }
        if (cur.peek() == var) {
            ++cur.i;
            exponent = 1;
            if (cur.peek() == '^') {
                ++cur.i;
                int esign = 1;
                if (cur.peek() == '-') {
                    esign = -1;
                    ++cur.i;
                } else if (cur.peek() == '+') {
                    ++cur.i;
                }
                std::string e = cur.digits();
                if (e.empty() || e.size() > 6) fail(s);
                exponent = esign * std::stoi(e);
            }
        } else if (!have_coeff) {
            fail(s);
        }
        out[exponent] += sign * coeff;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace young::detail
