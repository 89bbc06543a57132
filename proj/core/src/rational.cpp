#include "young/rational.hpp"

#include <cctype>

#include "young/errors.hpp"

namespace young {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, true))
        throw ParseError("invalid rational: '" + std::string(s) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    std::string d(den);
    if (d[0] == '+') d.erase(0, 1);
    Integer p(n, 10), q(d, 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace young
