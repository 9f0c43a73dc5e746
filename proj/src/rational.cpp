#include "brickwall/rational.hpp"

#include <cctype>

namespace brickwall {

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}

rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw error("malformed rational '" + std::string(text) + "'");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    mpz_class d{std::string(den)};
    if (d == 0)
        throw error("zero denominator in '" + std::string(text) + "'");
    rational q(mpz_class(n), d);
    q.canonicalize();
    return q;
}

std::string fraction_string(const rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string short_string(const rational& q)
{
    return q.get_str();
}

std::string to_string(const big_count& n)
{
    return n.get_str();
}

}
