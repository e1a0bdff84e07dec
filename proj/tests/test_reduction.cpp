#include "sandpile/critgroup.hpp"
#include "sandpile/exactla.hpp"
#include "sandpile/reduction.hpp"

#include <doctest.h>

using namespace sandpile;
using namespace sandpile::reduction;

namespace {

IntegerMatrix m1(std::size_t n)
{
    return relations_matrix(n).without(0, 0);
}

IntegerMatrix m2(std::size_t n)
{
    return constants::L1() * m1(n) * constants::R1();
}

std::vector<Integer> nontrivial_snf(const IntegerMatrix& a)
{
    return snf(a).nontrivial();
}

} // namespace

TEST_CASE("transform constants are unimodular")
{
    const auto all = constants::all();
    CHECK(all.size() == 9);
    for (const auto& c : all) {
        CAPTURE(c.name);
        CHECK(c.matrix.rows() == 7);
        CHECK(is_unimodular(c.matrix));
    }
}

TEST_CASE("corrected constant entries")
{
    CHECK(constants::L3()(6, 4) == 0);
    CHECK(det_bareiss(constants::L3()) * det_bareiss(constants::L3()) == 1);
    CHECK(constants::R3()(4, 4) == -6);
}

TEST_CASE("p and q terms")
{
    // n = 5: p_0 = e_0 + e_5 = 209, p_2 = e_2 + e_3 = 19, q_1 = f_1 + f_4 = 205
    CHECK(p_term(5, 0) == 209);
    CHECK(p_term(5, 2) == 19);
    CHECK(q_term(5, 1) == 205);
    // negative index: p_{-1} = e_{-1} + e_6 = -1 + 780
    CHECK(p_term(5, -1) == 779);
    CHECK(p_term(5, 6) == 779);
}

TEST_CASE("first transform and shifts match the templates")
{
    for (std::size_t n = 3; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(m2(n) == stage_template(n, 0));
        for (unsigned i = 1; i <= n / 2 + 1; ++i)
            CHECK(power(constants::U(), i) * m2(n) == stage_template(n, i));
    }
}

TEST_CASE("odd blocks")
{
    CHECK(odd_block_x(5) == IntegerMatrix{{0, 38, 0}, {19, 0, 38}, {41, 19, 0}});
    for (std::size_t n = 3; n <= 41; n += 2) {
        CAPTURE(n);
        const auto s = static_cast<unsigned>(n / 2);
        const auto reduced = constants::L2() * power(constants::U(), s + 1) * m2(n) * constants::R2();
        CHECK(reduced == direct_sum(odd_block_x(n), odd_block_y(n)));
        CHECK(nontrivial_snf(reduced) == closed_form_group(n).invariant_factors());
    }
}

TEST_CASE("even blocks")
{
    for (std::size_t n = 4; n <= 40; n += 2) {
        CAPTURE(n);
        const auto s = static_cast<unsigned>(n / 2);
        const auto m3 = constants::L3() * power(constants::U(), s + 1) * m2(n) * constants::R3();
        CHECK(m3 == even_m3(n));
        CHECK(nontrivial_snf(m3) == closed_form_group(n).invariant_factors());
        // the rescaled M3' is not equivalent to M3, only its block split is checked
        CHECK(unscale_m3(m3) == even_m3_prime(n));
        const auto split = constants::L4() * even_m3_prime(n) * constants::R4();
        CHECK(split == direct_sum(even_block_e(n), even_block_f(n)));
    }
}

TEST_CASE("unscale_m3 rejects inexact input")
{
    CHECK_THROWS(unscale_m3(IntegerMatrix::identity(7)));
}

TEST_CASE("pipeline report")
{
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto report = verify_reduction_pipeline(n);
        CAPTURE(n);
        CHECK(report.n == n);
        CHECK(report.all_passed);
        CHECK(report.stage_checks.size() == (n % 2 == 1 ? 6 : 8));
        for (const auto& c : report.stage_checks) {
            CAPTURE(c.name);
            CHECK(c.passed);
        }
    }
}
