#pragma once

#include "sandpile/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sandpile {

struct SnfTransforms {
    IntegerMatrix left;  // P, rows x rows
    IntegerMatrix right; // Q, cols x cols
};

/// Smith normal form of an integer matrix.
///
/// `diagonal` holds min(rows, cols) nonnegative entries forming a
/// divisibility chain, zeros last. When transforms were requested,
/// left * A * right is the rectangular diagonal matrix with these entries.
struct SnfResult {
    std::vector<Integer> diagonal;
    std::optional<SnfTransforms> transforms;
    /// Largest entry bit length seen while reducing.
    std::size_t peak_bits = 0;

    std::size_t rank() const;
    /// Diagonal entries other than 0 and 1.
    std::vector<Integer> nontrivial() const;
};

/// Elementary-operation SNF. Each stage pivots on the entry of least absolute
/// value in the trailing submatrix, clears its row and column by Euclidean
/// steps, and folds in any row whose entries the pivot fails to divide.
SnfResult snf(const IntegerMatrix& a, bool want_transforms = false);

/// gcd of all k x k minors (oracle; min dimension capped at 8).
Integer determinantal_divisor(const IntegerMatrix& a, std::size_t k);

/// Invariant factors Delta_i / Delta_{i-1} from determinantal divisors.
std::vector<Integer> invariant_factors_from_divisors(const IntegerMatrix& a);

/// Fraction-free (Bareiss) determinant.
Integer det_bareiss(const IntegerMatrix& a);

bool is_unimodular(const IntegerMatrix& a);

/// Rearranges a multiset of positive integers into the divisibility chain
/// with the same elementary divisors by repeated (gcd, lcm) replacement.
std::vector<Integer> canonical_chain(std::vector<Integer> factors);

inline constexpr std::size_t kDivisorOracleMaxDim = 8;

} // namespace sandpile
