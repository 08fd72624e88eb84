#include "nckit/rational.hpp"

#include "nckit/error.hpp"

namespace nckit {

std::string rational_str(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

static bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw input_error("bad-rational", "cannot parse rational '" + std::string(text) + "'");
    if (num[0] == '+') num.remove_prefix(1);
    if (den[0] == '+') den.remove_prefix(1);
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw input_error("bad-rational", "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace nckit
