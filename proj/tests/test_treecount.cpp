#include "sandpile/critgroup.hpp"
#include "sandpile/treecount.hpp"

#include <cmath>

#include <doctest.h>

using namespace sandpile;

namespace {

Multigraph complete(std::size_t n)
{
    Multigraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("closed form values")
{
    CHECK(tree_count_closed(3) == 367500);
    CHECK(tree_count_closed(4) == 42467328);
    CHECK(tree_count_closed(5) == Integer("4381392020"));
    CHECK_THROWS_AS(tree_count_closed(2), std::invalid_argument);
}

TEST_CASE("matrix-tree count on familiar graphs")
{
    for (std::size_t n = 3; n <= 10; ++n)
        CHECK(tree_count_matrix(cycle(n)) == Integer(static_cast<unsigned long>(n)));
    // Cayley: n^{n-2}
    CHECK(tree_count_matrix(complete(4)) == 16);
    CHECK(tree_count_matrix(complete(6)) == 1296);
    CHECK(tree_count_matrix(Multigraph(1)) == 1);

    Multigraph dipole(2);
    dipole.add_edge(0, 1, 5);
    CHECK(tree_count_matrix(dipole) == 5);

    Multigraph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(tree_count_matrix(split) == 0);
}

TEST_CASE("closed form matches Matrix-Tree for C4 x Cn")
{
    for (std::size_t n = 3; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(tree_count_matrix(c4xcn(n)) == tree_count_closed(n));
    }
}

TEST_CASE("tree count equals the critical group order")
{
    for (std::size_t n = 3; n <= 60; ++n)
        CHECK(closed_form_group(n).order() == tree_count_closed(n));
}

TEST_CASE("log_integer")
{
    CHECK(static_cast<double>(log_integer(Integer(1))) == doctest::Approx(0.0));
    CHECK(static_cast<double>(log_integer(Integer(-1000))) == doctest::Approx(std::log(1000.0)));
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 500);
    CHECK(static_cast<double>(log_integer(big)) == doctest::Approx(500 * std::log(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_integer(Integer(0)), std::invalid_argument);
}

TEST_CASE("cosine product check")
{
    for (std::size_t n : {3, 4, 5, 40, 200}) {
        const auto r = trig_product_check(n, 1e-9);
        CAPTURE(n);
        CHECK(r.passed);
        REQUIRE(r.trig_log_residual.has_value());
        CHECK(*r.trig_log_residual < 1e-9);
    }
    CHECK_THROWS_AS(trig_product_check(5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(trig_product_check(5, -1.0), std::invalid_argument);
}

TEST_CASE("tree count report")
{
    const auto plain = tree_count_report(5, false, std::nullopt);
    CHECK(plain.closed_form == Integer("4381392020"));
    CHECK_FALSE(plain.matrix_tree.has_value());
    CHECK_FALSE(plain.trig_log_residual.has_value());
    CHECK(plain.passed);

    const auto full = tree_count_report(6, true, 1e-9);
    REQUIRE(full.matrix_tree.has_value());
    CHECK(*full.matrix_tree == full.closed_form);
    CHECK(full.trig_log_residual.has_value());
    CHECK(full.passed);
}
