#include "sandpile/treecount.hpp"

#include "sandpile/exactla.hpp"
#include "sandpile/seq.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sandpile {

Integer tree_count_closed(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("C4 x Cn needs n >= 3, got " + std::to_string(n));
    const std::size_t s = n / 2;
    Integer result;
    if (n % 2 == 1) {
        const Integer h = seq::derived_seq(seq::SeqKind::H, s);
        const Integer g = seq::derived_seq(seq::SeqKind::G, s);
        const Integer h2 = h * h;
        result = 4 * Integer(static_cast<unsigned long>(n)) * h2 * h2 * g * g;
    } else {
        const Integer e = seq::derived_seq(seq::SeqKind::E, s);
        const Integer f = seq::derived_seq(seq::SeqKind::F, s);
        const Integer e2 = e * e;
        result = 256 * 9 * Integer(static_cast<unsigned long>(s)) * e2 * e2 * f * f;
    }
    return result;
}

Integer tree_count_matrix(const Multigraph& g)
{
    if (g.vertex_count() == 1)
        return 1;
    return det_bareiss(laplacian(g).without(0, 0));
}

long double log_integer(const Integer& x)
{
    if (x == 0)
        throw std::invalid_argument("logarithm of zero");
    const Integer mag = abs(x);
    const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    if (bits <= 64)
        return std::log(static_cast<long double>(mpz_get_ui(mag.get_mpz_t())));
    Integer top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), mag.get_mpz_t(), bits - 64);
    const long double mantissa = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
    return std::log(mantissa) + static_cast<long double>(bits - 64) * std::numbers::ln2_v<long double>;
}

TreeCountReport trig_product_check(std::size_t n, double rel_tolerance)
{
    if (!(rel_tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
    TreeCountReport report;
    report.n = n;
    report.closed_form = tree_count_closed(n);

    long double sum = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t j = 1; j < n; ++j) {
        const long double c = std::cos(two_pi * static_cast<long double>(j) / static_cast<long double>(n));
        sum += 2 * std::log(4 - 2 * c) + std::log(6 - 2 * c);
    }
    const long double exact = log_integer(report.closed_form) - std::log(4.0L * static_cast<long double>(n));
    const long double residual = (sum - exact) / exact;
    report.trig_log_residual = static_cast<double>(residual);
    report.passed = std::fabs(residual) <= rel_tolerance;
    return report;
}

TreeCountReport tree_count_report(std::size_t n, bool with_matrix, std::optional<double> trig_tolerance)
{
    TreeCountReport report = trig_tolerance ? trig_product_check(n, *trig_tolerance) : TreeCountReport{};
    if (!trig_tolerance) {
        report.n = n;
        report.closed_form = tree_count_closed(n);
    }
    if (with_matrix) {
        report.matrix_tree = tree_count_matrix(c4xcn(n));
        report.passed = report.passed && *report.matrix_tree == report.closed_form;
    }
    return report;
}

} // namespace sandpile
