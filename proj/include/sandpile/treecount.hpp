#pragma once

#include "sandpile/graph.hpp"

#include <cstddef>
#include <optional>

namespace sandpile {

/// Spanning trees of C4 x Cn: 4 n h_s^4 g_s^2 for n = 2s+1,
/// 2^8 3^2 s e_s^4 f_s^2 for n = 2s.
Integer tree_count_closed(std::size_t n);

/// Matrix-Tree count: determinant of the Laplacian with row and column 0
/// removed. Zero exactly when g is disconnected.
Integer tree_count_matrix(const Multigraph& g);

/// ln|x| for nonzero x, using its top 64 significant bits.
long double log_integer(const Integer& x);

struct TreeCountReport {
    std::size_t n = 0;
    Integer closed_form;
    std::optional<Integer> matrix_tree;
    std::optional<double> trig_log_residual;
    bool passed = true;
};

/// Compares sum_{j=1}^{n-1} [2 ln(4 - 2cos(2 pi j/n)) + ln(6 - 2cos(2 pi j/n))]
/// with ln(tree_count_closed(n) / 4n) and reports the relative difference.
TreeCountReport trig_product_check(std::size_t n, double rel_tolerance);

/// Closed form, optionally cross-checked by Matrix-Tree and the cosine product.
TreeCountReport tree_count_report(std::size_t n, bool with_matrix, std::optional<double> trig_tolerance);

} // namespace sandpile
