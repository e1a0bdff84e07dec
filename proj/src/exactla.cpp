#include "sandpile/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sandpile {

std::size_t SnfResult::rank() const
{
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

std::vector<Integer> SnfResult::nontrivial() const
{
    std::vector<Integer> out;
    for (const auto& d : diagonal)
        if (d != 0 && d != 1)
            out.push_back(d);
    return out;
}

namespace {

// Reduction state: D = P * A * Q throughout.
struct Reducer {
    IntegerMatrix d;
    std::optional<IntegerMatrix> p;
    std::optional<IntegerMatrix> q;

    void swap_rows(std::size_t a, std::size_t b)
    {
        d.swap_rows(a, b);
        if (p)
            p->swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        d.swap_cols(a, b);
        if (q)
            q->swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& f)
    {
        d.add_row_multiple(dst, src, f);
        if (p)
            p->add_row_multiple(dst, src, f);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f)
    {
        d.add_col_multiple(dst, src, f);
        if (q)
            q->add_col_multiple(dst, src, f);
    }
    void negate_row(std::size_t r)
    {
        d.negate_row(r);
        if (p)
            p->negate_row(r);
    }
};

// Position of the nonzero entry of least absolute value in d[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntegerMatrix& d, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Integer& v = d(i, j);
            if (v == 0)
                continue;
            if (!best || mpz_cmpabs(v.get_mpz_t(), d(best->first, best->second).get_mpz_t()) < 0) {
                best = {i, j};
                if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0)
                    return best;
            }
        }
    return best;
}

} // namespace

SnfResult snf(const IntegerMatrix& a, bool want_transforms)
{
    Reducer red{a, std::nullopt, std::nullopt};
    if (want_transforms) {
        red.p = IntegerMatrix::identity(a.rows());
        red.q = IntegerMatrix::identity(a.cols());
    }
    IntegerMatrix& d = red.d;
    const std::size_t k = std::min(a.rows(), a.cols());
    std::size_t peak = a.max_bits();
    Integer quot;

    for (std::size_t t = 0; t < k; ++t) {
        bool empty = false;
        for (;;) {
            auto pivot = smallest_entry(d, t);
            if (!pivot) {
                empty = true;
                break;
            }
            red.swap_rows(t, pivot->first);
            red.swap_cols(t, pivot->second);
            const Integer piv = d(t, t);

            bool cleared = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                mpz_tdiv_q(quot.get_mpz_t(), d(i, t).get_mpz_t(), piv.get_mpz_t());
                red.add_row(i, t, -quot);
                cleared = cleared && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                mpz_tdiv_q(quot.get_mpz_t(), d(t, j).get_mpz_t(), piv.get_mpz_t());
                red.add_col(j, t, -quot);
                cleared = cleared && d(t, j) == 0;
            }
            if (!cleared)
                continue; // a smaller remainder is left; re-pivot on it

            // Pivot must divide the whole trailing block, else pull an offending row up.
            std::optional<std::size_t> offender;
            if (mpz_cmpabs_ui(piv.get_mpz_t(), 1) != 0) {
                for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
                    for (std::size_t j = t + 1; j < d.cols(); ++j)
                        if (!divides(piv, d(i, j))) {
                            offender = i;
                            break;
                        }
            }
            if (!offender)
                break;
            red.add_row(t, *offender, 1);
        }
        if (empty)
            break;
        if (d(t, t) < 0)
            red.negate_row(t);
        peak = std::max(peak, d.max_bits());
    }

    SnfResult result;
    result.diagonal.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        result.diagonal.push_back(d(i, i));
    if (want_transforms)
        result.transforms = SnfTransforms{std::move(*red.p), std::move(*red.q)};
    result.peak_bits = peak;
    return result;
}

Integer det_bareiss(const IntegerMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("determinant needs a square matrix, got " + std::to_string(a.rows()) + "x"
                                    + std::to_string(a.cols()));
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntegerMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    Integer tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // m(i,j) = (m(i,j) * m(k,k) - m(i,k) * m(k,j)) / prev, exact
                mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& a)
{
    if (!a.is_square())
        return false;
    const Integer det = det_bareiss(a);
    return det == 1 || det == -1;
}

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!visit(idx))
            return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Integer determinantal_divisor(const IntegerMatrix& a, std::size_t k)
{
    const std::size_t dim = std::min(a.rows(), a.cols());
    if (k == 0 || k > dim)
        throw std::invalid_argument("minor size " + std::to_string(k) + " out of range 1.." + std::to_string(dim));
    if (dim > kDivisorOracleMaxDim)
        throw std::invalid_argument("determinantal divisor oracle is limited to min dimension "
                                    + std::to_string(kDivisorOracleMaxDim));
    Integer g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
        return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
            g = gcd(g, det_bareiss(a.select(rows, cols)));
            return g != 1;
        });
    });
    return g;
}

std::vector<Integer> invariant_factors_from_divisors(const IntegerMatrix& a)
{
    const std::size_t dim = std::min(a.rows(), a.cols());
    std::vector<Integer> factors;
    factors.reserve(dim);
    Integer previous = 1;
    for (std::size_t i = 1; i <= dim; ++i) {
        Integer delta = determinantal_divisor(a, i);
        if (delta == 0) {
            factors.resize(dim, 0);
            break;
        }
        factors.push_back(exact_div(delta, previous));
        previous = std::move(delta);
    }
    return factors;
}

std::vector<Integer> canonical_chain(std::vector<Integer> factors)
{
    for (const auto& f : factors)
        if (f < 1)
            throw std::invalid_argument("canonical chain needs positive factors, got " + to_string(f));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (divides(factors[i], factors[j]))
                    continue;
                Integer g = gcd(factors[i], factors[j]);
                Integer l = lcm(factors[i], factors[j]);
                factors[i] = std::move(g);
                factors[j] = std::move(l);
                changed = true;
            }
    }
    return factors;
}

} // namespace sandpile
