#include "hsjack/rational.hpp"

#include <cctype>

namespace hsjack {

namespace {

bool is_integer_literal(const std::string& s)
{
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const std::string s = trim(text);
    const auto slash = s.find('/');
    std::string num = s, den = "1";
    if (slash != std::string::npos) {
        num = trim(s.substr(0, slash));
        den = trim(s.substr(slash + 1));
    }
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw InvalidInput("not a rational number: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_pq(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_pq(q);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hsjack
