// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "sandpile/critgroup.hpp"
#include "sandpile/exactla.hpp"
#include "sandpile/reduction.hpp"
#include "sandpile/seq.hpp"
#include "sandpile/treecount.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace sandpile;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

std::string n_str(std::size_t n)
{
    return "n=" + std::to_string(n);
}

Verdict example_groups()
{
    Verdict v;
    const std::vector<std::pair<std::size_t, std::vector<Integer>>> expected{
        {4, ints({2, 2, 8, 24, 24, 24, 96})},
        {5, ints({19, 19, 779, 15580})},
        {6, ints({5, 15, 15, 60, 1260, 5040})},
    };
    const std::vector<std::pair<const char*, std::function<AbelianGroup(std::size_t)>>> methods{
        {"closed", closed_form_group},
        {"relations", group_via_relations},
        {"snf", [](std::size_t n) { return group_of_graph(c4xcn(n)); }},
    };
    double slowest = 0;
    for (const auto& [n, factors] : expected)
        for (const auto& [name, method] : methods) {
            const auto start = Clock::now();
            const auto g = method(n);
            const double t = seconds_since(start);
            slowest = std::max(slowest, t);
            if (g.invariant_factors() != factors)
                v.fail(n_str(n) + " " + name + " gave " + g.to_string());
            if (t >= 1.0)
                v.fail(n_str(n) + " " + name + " took " + std::to_string(t) + " s");
        }
    if (v.passed)
        v.detail = "9 exact matches, slowest " + std::to_string(slowest) + " s (limit 1 s)";
    return v;
}

Verdict three_way_sweep()
{
    Verdict v;
    const auto start = Clock::now();
    for (std::size_t n = 3; n <= 40; ++n) {
        const auto closed = closed_form_group(n);
        if (closed != group_via_relations(n))
            v.fail(n_str(n) + " closed vs relations");
        else if (closed != group_of_graph(c4xcn(n)))
            v.fail(n_str(n) + " closed vs Laplacian SNF");
    }
    const double t = seconds_since(start);
    if (t >= 300.0)
        v.fail("took " + std::to_string(t) + " s");
    if (v.passed)
        v.detail = "n=3..40, " + std::to_string(t) + " s (limit 300 s)";
    return v;
}

Verdict extended_sweep()
{
    Verdict v;
    const auto start = Clock::now();
    for (std::size_t n = 3; n <= 500; ++n)
        if (closed_form_group(n) != group_via_relations(n))
            v.fail(n_str(n) + " closed vs relations");
    const double t = seconds_since(start);
    if (t >= 120.0)
        v.fail("took " + std::to_string(t) + " s");
    if (v.passed)
        v.detail = "n=3..500, " + std::to_string(t) + " s (limit 120 s)";
    return v;
}

Verdict tree_counts()
{
    Verdict v;
    for (std::size_t n = 3; n <= 24; ++n)
        if (tree_count_closed(n) != tree_count_matrix(c4xcn(n)))
            v.fail(n_str(n) + " closed vs Matrix-Tree");
    for (std::size_t n = 3; n <= 500; ++n)
        if (tree_count_closed(n) != closed_form_group(n).order())
            v.fail(n_str(n) + " closed vs group order");
    if (v.passed)
        v.detail = "Matrix-Tree n=3..24, group order n=3..500";
    return v;
}

Verdict cosine_product()
{
    Verdict v;
    constexpr double tolerance = 1e-9;
    const auto start = Clock::now();
    double worst = 0;
    for (std::size_t n = 3; n <= 200; ++n) {
        const auto r = trig_product_check(n, tolerance);
        worst = std::max(worst, r.trig_log_residual.value_or(1.0));
        if (!r.passed)
            v.fail(n_str(n) + " residual " + std::to_string(r.trig_log_residual.value_or(-1)));
    }
    const double t = seconds_since(start);
    if (t >= 10.0)
        v.fail("took " + std::to_string(t) + " s");
    if (v.passed) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "n=3..200, worst relative residual %.3g (tol 1e-9), %.3f s", worst, t);
        v.detail = buf;
    }
    return v;
}

Verdict valuations()
{
    Verdict v;
    const auto start = Clock::now();
    const auto e = seq::derived_terms(seq::SeqKind::E, 1001);
    const auto f = seq::derived_terms(seq::SeqKind::F, 1001);
    std::size_t assertions = 0;
    for (std::uint64_t n = 2; n <= 1000; ++n)
        for (unsigned prime : {2u, 3u}) {
            const Integer p(prime);
            const auto pe = seq::predicted_valuation(seq::ValuationKind::E, prime, n).predicted_exponent;
            const auto pf = seq::predicted_valuation(seq::ValuationKind::F, prime, n).predicted_exponent;
            if (pe != seq::observed_valuation(e[n], p))
                v.fail(n_str(n) + " e, p=" + std::to_string(prime));
            if (pf != seq::observed_valuation(f[n], p))
                v.fail(n_str(n) + " f, p=" + std::to_string(prime));
            assertions += 2;
        }
    const double t = seconds_since(start);
    if (assertions != 3996)
        v.fail("ran " + std::to_string(assertions) + " assertions");
    if (t >= 30.0)
        v.fail("took " + std::to_string(t) + " s");
    if (v.passed)
        v.detail = std::to_string(assertions) + " assertions, " + std::to_string(t) + " s (limit 30 s)";
    return v;
}

Verdict subgroups()
{
    Verdict v;
    std::size_t pairs = 0;
    for (std::size_t n1 = 3; n1 <= 60; ++n1)
        for (std::size_t n2 = 2 * n1; n2 <= 60; n2 += n1) {
            ++pairs;
            if (!subgroup_check(n1, n2))
                v.fail("(" + std::to_string(n1) + ", " + std::to_string(n2) + ")");
        }
    if (v.passed)
        v.detail = std::to_string(pairs) + " divisor pairs";
    return v;
}

Verdict pipeline()
{
    Verdict v;
    for (const auto& c : reduction::constants::all()) {
        const auto det = det_bareiss(c.matrix);
        if (det != 1 && det != -1)
            v.fail(std::string(c.name) + " has det " + to_string(det));
    }
    for (std::size_t n = 3; n <= 40; ++n) {
        const auto report = reduction::verify_reduction_pipeline(n);
        if (report.all_passed)
            continue;
        for (const auto& s : report.stage_checks)
            if (!s.passed)
                v.fail(n_str(n) + " stage " + s.name + ": " + s.detail);
    }
    if (v.passed)
        v.detail = "nine constants unimodular, all stages pass for n=3..40";
    return v;
}

Verdict snf_soundness()
{
    using namespace sandpile::testing;
    Verdict v;
    std::mt19937_64 rng(0x5a4d9113);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    constexpr int trials = 1200;
    for (int trial = 0; trial < trials && v.passed; ++trial) {
        const auto rows = dim(rng), cols = dim(rng);
        const auto a = random_matrix(rng, rows, cols, -9, 9);
        const auto res = snf(a, true);
        const std::string tag = "trial " + std::to_string(trial);
        if (res.diagonal != invariant_factors_from_divisors(a))
            v.fail(tag + ": differs from divisor oracle");
        const auto& t = *res.transforms;
        if (!is_unimodular(t.left) || !is_unimodular(t.right))
            v.fail(tag + ": transform not unimodular");
        if (t.left * a * t.right != rect_diagonal(rows, cols, res.diagonal))
            v.fail(tag + ": P*A*Q != D");
        const auto u = random_unimodular(rng, rows, 20);
        const auto w = random_unimodular(rng, cols, 20);
        if (snf(u * a * w).diagonal != res.diagonal)
            v.fail(tag + ": not invariant under unimodular multiplication");
    }
    if (v.passed)
        v.detail = std::to_string(trials) + " random matrices, dims <= 6, entries in [-9, 9]";
    return v;
}

Verdict sequence_identities()
{
    Verdict v;
    std::size_t checked = 0;
    for (unsigned m = 1; m <= 6; ++m) {
        const auto u = seq::u_terms(m, 513);
        const auto vv = seq::v_terms(m, 513);
        for (std::size_t p = 1; p <= 256; ++p)
            for (std::size_t q = 2; p * q <= 512; ++q) {
                const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                if (u[p * q] != vv[p * (q - 1)] * u[p] + u[p * (q - 2)])
                    v.fail("composition " + tag);
                if (u[p * q] != seq::v_partial_sum(m, p, q) * u[p])
                    v.fail("factorization " + tag);
                checked += 2;
            }
    }
    for (unsigned m = 2; m <= 5; ++m) {
        const auto u = seq::u_terms(m, 2001);
        const auto vv = seq::v_terms(m, 2001);
        for (std::size_t p = 0; p <= 2000; ++p) {
            if (u[p] % m != p % m)
                v.fail("u congruence m=" + std::to_string(m) + " p=" + std::to_string(p));
            if (vv[p] % m != 2 % m)
                v.fail("v congruence m=" + std::to_string(m) + " p=" + std::to_string(p));
            checked += 2;
        }
    }
    for (unsigned m : {2u, 4u}) {
        const auto u = seq::u_terms(m, 1001);
        const auto vv = seq::v_terms(m, 2001);
        for (std::size_t p = 0; p <= 1000; ++p) {
            if (vv[2 * p] != m * (m + 4) * u[p] * u[p] + 2)
                v.fail("doubling m=" + std::to_string(m) + " p=" + std::to_string(p));
            ++checked;
        }
    }
    if (v.passed)
        v.detail = std::to_string(checked) + " identity checks";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
        {"AC1  example groups n=4,5,6, three methods", example_groups},
        {"AC2  three-way agreement n=3..40", three_way_sweep},
        {"AC3  closed form vs relations n=3..500", extended_sweep},
        {"AC4  tree counts", tree_counts},
        {"AC5  cosine product identity n=3..200", cosine_product},
        {"AC6  2- and 3-adic valuations n=2..1000", valuations},
        {"AC7  subgroup divisibility for n1 | n2 <= 60", subgroups},
        {"AC8  reduction pipeline n=3..40", pipeline},
        {"AC9  SNF engine soundness", snf_soundness},
        {"AC10 sequence identities", sequence_identities},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& ex) {
            v.fail(std::string("exception: ") + ex.what());
        }
        failures += v.passed ? 0 : 1;
        std::printf("%s %s: %s\n", v.passed ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
