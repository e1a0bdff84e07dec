#pragma once

#include "sandpile/integer.hpp"

#include <cstdint>
#include <vector>

// Second-order integer sequences x_{k+1} = (m+2) x_k - x_{k-1}.
//
//   u: u_0 = 0, u_1 = 1        v: v_0 = 2, v_1 = m + 2
//
// e_n = u_n(2), f_n = u_n(4), h_n = e_n + e_{n+1}, g_n = f_n + f_{n+1}.
namespace sandpile::seq {

enum class SeqKind { E, F, H, G };

/// The recurrence parameter m that a derived sequence is built from.
constexpr std::uint64_t parameter_of(SeqKind kind)
{
    return (kind == SeqKind::E || kind == SeqKind::H) ? 2 : 4;
}

Integer u_seq(std::uint64_t m, std::uint64_t p);
Integer v_seq(std::uint64_t m, std::uint64_t p);

/// u_0(m), ..., u_{count-1}(m) in one pass.
std::vector<Integer> u_terms(std::uint64_t m, std::size_t count);
std::vector<Integer> v_terms(std::uint64_t m, std::size_t count);

/// u extended to negative indices by u_{-k} = -u_k.
Integer u_signed(std::uint64_t m, std::int64_t p);

Integer derived_seq(SeqKind kind, std::uint64_t n);
std::vector<Integer> derived_terms(SeqKind kind, std::size_t count);

/// V_q(m) for even q, V'_q(m) for odd q; u_{pq}(m) = v_partial_sum(m, p, q) * u_p(m).
Integer v_partial_sum(std::uint64_t m, std::uint64_t p, std::uint64_t q);

enum class ValuationKind { E, F };

struct ValuationPrediction {
    unsigned prime;
    ValuationKind kind;
    std::uint64_t n;
    std::uint64_t predicted_exponent;
};

/// 2- and 3-adic valuations of e_n and f_n from the factorization exponents of n alone.
ValuationPrediction predicted_valuation(ValuationKind kind, unsigned prime, std::uint64_t n);

/// Largest k with prime^k dividing |x|.
std::uint64_t observed_valuation(const Integer& x, const Integer& prime);
std::uint64_t observed_valuation(std::uint64_t x, std::uint64_t prime);

} // namespace sandpile::seq
