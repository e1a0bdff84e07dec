#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include "sandpile/matrix.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace sandpile::testing {

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

/// Product of random elementary operations, so determinant +-1 by construction.
inline IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12)
{
    IntegerMatrix u = IntegerMatrix::identity(n);
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> factor(-3, 3);
    for (int s = 0; s < steps; ++s) {
        const auto i = pick(rng), j = pick(rng);
        if (i == j)
            u.negate_row(i);
        else
            u.add_row_multiple(i, j, factor(rng));
    }
    return u;
}

/// Laplace expansion along the first row; only for small matrices.
inline Integer cofactor_det(const IntegerMatrix& a)
{
    if (a.rows() == 0)
        return 1;
    if (a.rows() == 1)
        return a(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(0, c) == 0)
            continue;
        const Integer term = a(0, c) * cofactor_det(a.without(0, c));
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// rows x cols matrix with `diag` on the leading diagonal.
inline IntegerMatrix rect_diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& diag)
{
    IntegerMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i)
        d(i, i) = diag[i];
    return d;
}

inline bool is_chain(const std::vector<Integer>& d)
{
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0)
            return false;
        if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0)
            return false;
    }
    return d.empty() || d.back() >= 0;
}

} // namespace sandpile::testing
