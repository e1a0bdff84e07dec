#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sandpile {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(10); }

/// Parses a base-10 integer with optional leading sign; throws on anything else.
inline Integer parse_integer(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

/// Left fold of gcd starting from 0, so gcd_all({a}) == |a| and gcd_all({}) == 0.
inline Integer gcd_all(std::initializer_list<Integer> values)
{
    Integer g = 0;
    for (const auto& v : values)
        g = gcd(g, v);
    return g;
}

inline Integer gcd_all(std::span<const Integer> values)
{
    Integer g = 0;
    for (const auto& v : values)
        g = gcd(g, v);
    return g;
}

/// Quotient of an exact division; throws std::logic_error if d does not divide n.
inline Integer exact_div(const Integer& n, const Integer& d)
{
    if (d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("inexact division: " + to_string(n) + " / " + to_string(d));
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool divides(const Integer& d, const Integer& n)
{
    if (d == 0)
        return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

} // namespace sandpile
