#include "sandpile/seq.hpp"

#include <stdexcept>

namespace sandpile::seq {

namespace {

void require_parameter(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("sequence parameter m must be positive");
}

std::vector<Integer> terms(std::uint64_t m, std::size_t count, const Integer& x0, const Integer& x1)
{
    require_parameter(m);
    std::vector<Integer> out;
    out.reserve(count);
    if (count > 0)
        out.push_back(x0);
    if (count > 1)
        out.push_back(x1);
    const Integer k = Integer(static_cast<unsigned long>(m + 2));
    for (std::size_t i = 2; i < count; ++i)
        out.push_back(k * out[i - 1] - out[i - 2]);
    return out;
}

Integer nth(std::uint64_t m, std::uint64_t p, Integer a, Integer b)
{
    require_parameter(m);
    const Integer k = Integer(static_cast<unsigned long>(m + 2));
    for (std::uint64_t i = 0; i < p; ++i) {
        Integer next = k * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

} // namespace

Integer u_seq(std::uint64_t m, std::uint64_t p) { return nth(m, p, 0, 1); }

Integer v_seq(std::uint64_t m, std::uint64_t p)
{
    return nth(m, p, 2, Integer(static_cast<unsigned long>(m + 2)));
}

std::vector<Integer> u_terms(std::uint64_t m, std::size_t count) { return terms(m, count, 0, 1); }

std::vector<Integer> v_terms(std::uint64_t m, std::size_t count)
{
    return terms(m, count, 2, Integer(static_cast<unsigned long>(m + 2)));
}

Integer u_signed(std::uint64_t m, std::int64_t p)
{
    if (p >= 0)
        return u_seq(m, static_cast<std::uint64_t>(p));
    return -u_seq(m, static_cast<std::uint64_t>(-p));
}

Integer derived_seq(SeqKind kind, std::uint64_t n)
{
    const auto m = parameter_of(kind);
    if (kind == SeqKind::E || kind == SeqKind::F)
        return u_seq(m, n);
    return u_seq(m, n) + u_seq(m, n + 1);
}

std::vector<Integer> derived_terms(SeqKind kind, std::size_t count)
{
    const auto m = parameter_of(kind);
    if (kind == SeqKind::E || kind == SeqKind::F)
        return u_terms(m, count);
    auto u = u_terms(m, count + 1);
    std::vector<Integer> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = u[i] + u[i + 1];
    return out;
}

Integer v_partial_sum(std::uint64_t m, std::uint64_t p, std::uint64_t q)
{
    require_parameter(m);
    if (q == 0)
        throw std::invalid_argument("v_partial_sum requires q >= 1");
    // Indices p(q+1-2i) for 0 < 2i <= q (even q) or 0 < 2i <= q+1 (odd q).
    const std::uint64_t top = p * (q - 1);
    const auto v = v_terms(m, top + 1);
    const std::uint64_t limit = (q % 2 == 0) ? q : q + 1;
    Integer sum = 0;
    for (std::uint64_t i = 1; 2 * i <= limit; ++i)
        sum += v[p * (q + 1 - 2 * i)];
    if (q % 2 == 1)
        sum -= 1;
    return sum;
}

ValuationPrediction predicted_valuation(ValuationKind kind, unsigned prime, std::uint64_t n)
{
    if (prime != 2 && prime != 3)
        throw std::invalid_argument("valuation predictions exist only for primes 2 and 3");
    if (n == 0)
        throw std::invalid_argument("valuation predictions require n >= 1");
    const auto t2 = observed_valuation(n, 2);
    const auto t3 = observed_valuation(n, 3);
    std::uint64_t exponent = 0;
    if (prime == 2)
        exponent = kind == ValuationKind::E ? (t2 == 0 ? 0 : t2 + 1) : t2;
    else
        exponent = kind == ValuationKind::E ? t3 : (t2 == 0 ? 0 : t3 + 1);
    return {prime, kind, n, exponent};
}

std::uint64_t observed_valuation(const Integer& x, const Integer& prime)
{
    if (x == 0)
        throw std::invalid_argument("valuation of 0 is infinite");
    if (prime < 2)
        throw std::invalid_argument("valuation base must be at least 2");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
}

std::uint64_t observed_valuation(std::uint64_t x, std::uint64_t prime)
{
    if (x == 0)
        throw std::invalid_argument("valuation of 0 is infinite");
    if (prime < 2)
        throw std::invalid_argument("valuation base must be at least 2");
    std::uint64_t k = 0;
    while (x % prime == 0) {
        x /= prime;
        ++k;
    }
    return k;
}

} // namespace sandpile::seq
