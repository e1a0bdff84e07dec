#include "sandpile/critgroup.hpp"

#include "sandpile/exactla.hpp"
#include "sandpile/seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sandpile {

namespace {

void require_family_size(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("C4 x Cn needs n >= 3, got " + std::to_string(n));
}

Integer from_size(std::size_t n) { return Integer(static_cast<unsigned long>(n)); }

} // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<Integer> orders)
{
    AbelianGroup g;
    for (auto& f : canonical_chain(std::move(orders)))
        if (f != 1)
            g.factors_.push_back(std::move(f));
    return g;
}

Integer AbelianGroup::order() const
{
    Integer product = 1;
    for (const auto& f : factors_)
        product *= f;
    return product;
}

std::string AbelianGroup::to_string() const
{
    if (factors_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i])
            ++j;
        os << (i ? " + " : "") << "Z_" << factors_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

ReductionCoeffs coeffs(std::uint64_t i)
{
    const Integer idx(static_cast<unsigned long>(i));
    const Integer e = seq::u_seq(2, i);
    const Integer f = seq::u_seq(4, i);
    return {i, exact_div(idx + f + 2 * e, 4), exact_div(idx - f, 4), exact_div(idx + f - 2 * e, 4)};
}

std::vector<ReductionCoeffs> coeffs_by_recurrence(std::size_t count)
{
    std::vector<ReductionCoeffs> out;
    out.reserve(count);
    if (count > 0)
        out.push_back({0, 0, 0, 0});
    if (count > 1)
        out.push_back({1, 1, 0, 0});
    for (std::size_t i = 2; i < count; ++i) {
        const auto& cur = out[i - 1];
        const auto& prev = out[i - 2];
        ReductionCoeffs next;
        next.index = i;
        next.a = 4 * cur.a - 2 * cur.b - prev.a;
        next.b = 4 * cur.b - (cur.a + cur.c) - prev.b;
        next.c = 4 * cur.c - 2 * cur.b - prev.c;
        out.push_back(std::move(next));
    }
    return out;
}

IntegerMatrix coefficient_block(const ReductionCoeffs& k)
{
    IntegerMatrix block(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        block(r, r) = k.a;
        block(r, (r + 1) % 4) = k.b;
        block(r, (r + 3) % 4) = k.b;
        block(r, (r + 2) % 4) = k.c;
    }
    return block;
}

IntegerMatrix relations_matrix(std::size_t n)
{
    require_family_size(n);
    const auto next = coefficient_block(coeffs(n + 1));
    const auto cur = coefficient_block(coeffs(n));
    const auto prev = coefficient_block(coeffs(n - 1));
    IntegerMatrix m(8, 8);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = next(r, c);
            m(r, c + 4) = -cur(r, c);
            m(r + 4, c) = cur(r, c);
            m(r + 4, c + 4) = -prev(r, c);
        }
    for (std::size_t i = 0; i < 8; ++i)
        m(i, i) -= 1;
    return m;
}

AbelianGroup group_via_relations(std::size_t n)
{
    const auto result = snf(relations_matrix(n));
    if (result.rank() != 7)
        throw std::logic_error("relations matrix for n = " + std::to_string(n) + " has rank "
                               + std::to_string(result.rank()) + ", expected 7");
    return AbelianGroup::from_cyclic_orders(result.nontrivial());
}

AbelianGroup group_of_graph(const Multigraph& g)
{
    const auto result = snf(laplacian(g));
    const std::size_t zeros = result.diagonal.size() - result.rank();
    if (zeros != 1)
        throw std::domain_error("graph is disconnected: Laplacian has " + std::to_string(zeros)
                                + " zero invariant factors");
    return AbelianGroup::from_cyclic_orders(result.nontrivial());
}

ClosedFormTuple closed_form_tuple(std::size_t n)
{
    require_family_size(n);
    const Integer nn = from_size(n);
    ClosedFormTuple out;
    auto& t = out.cyclic_orders;
    if (n % 2 == 1) {
        const std::size_t s = (n - 1) / 2;
        const Integer h = seq::derived_seq(seq::SeqKind::H, s);
        const Integer g = seq::derived_seq(seq::SeqKind::G, s);
        const Integer nhg = gcd_all({nn, h, g});
        const Integer nh = gcd_all({nn, h});
        const Integer hg = gcd_all({h, g});
        const Integer pairwise = gcd_all({nn * h, nn * g, h * g});
        t = {nhg,
             hg,
             exact_div(nh * hg, nhg),
             h,
             exact_div(h * pairwise, nh * hg),
             exact_div(h * g, hg),
             exact_div(4 * nn * h * g, pairwise)};
    } else {
        const std::size_t s = n / 2;
        const Integer ss = from_size(s);
        const Integer e = seq::derived_seq(seq::SeqKind::E, s);
        const Integer f = seq::derived_seq(seq::SeqKind::F, s);
        const Integer sef = gcd_all({ss, e, f});
        const Integer se = gcd_all({ss, e});
        const Integer ef = gcd_all({e, f});
        const Integer pairwise = gcd_all({ss * e, ss * f, e * f});
        if (s % 2 == 1) {
            t = {sef,
                 ef,
                 exact_div(se * ef, sef),
                 e,
                 exact_div(4 * e * pairwise, se * ef),
                 exact_div(12 * e * f, ef),
                 exact_div(48 * ss * e * f, pairwise)};
        } else {
            t = {sef,
                 ef,
                 exact_div(4 * se * ef, sef),
                 6 * e,
                 exact_div(6 * e * pairwise, se * ef),
                 exact_div(2 * e * f, ef),
                 exact_div(8 * ss * e * f, pairwise)};
        }
    }
    out.already_chain = true;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        out.already_chain = out.already_chain && divides(t[i], t[i + 1]);
    return out;
}

AbelianGroup closed_form_group(std::size_t n)
{
    const auto tuple = closed_form_tuple(n);
    return AbelianGroup::from_cyclic_orders({tuple.cyclic_orders.begin(), tuple.cyclic_orders.end()});
}

bool subgroup_check(std::size_t n1, std::size_t n2)
{
    const auto small = closed_form_group(n1).invariant_factors();
    const auto large = closed_form_group(n2).invariant_factors();
    const std::size_t width = std::max(small.size(), large.size());
    // Right-align both chains, padding with trivial factors at the small end.
    auto at = [width](const std::vector<Integer>& chain, std::size_t i) -> Integer {
        const std::size_t pad = width - chain.size();
        return i < pad ? Integer(1) : chain[i - pad];
    };
    for (std::size_t i = 0; i < width; ++i)
        if (!divides(at(small, i), at(large, i)))
            return false;
    return true;
}

std::vector<std::array<GeneratorVector, 4>> layer_expansion(std::size_t last_layer)
{
    std::vector<std::array<GeneratorVector, 4>> layers(std::max<std::size_t>(last_layer + 1, 2));
    for (std::size_t layer = 0; layer < 2; ++layer)
        for (std::size_t j = 0; j < 4; ++j) {
            layers[layer][j].fill(0);
            layers[layer][j][4 * layer + j] = 1;
        }
    for (std::size_t i = 1; i + 1 <= last_layer; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto& out = layers[i + 1][j];
            const auto& here = layers[i][j];
            const auto& right = layers[i][(j + 1) % 4];
            const auto& left = layers[i][(j + 3) % 4];
            const auto& below = layers[i - 1][j];
            for (std::size_t g = 0; g < 8; ++g)
                out[g] = 4 * here[g] - right[g] - left[g] - below[g];
        }
    layers.resize(last_layer + 1);
    return layers;
}

bool verify_layer_expansion(std::size_t n)
{
    require_family_size(n);
    const auto layers = layer_expansion(n);
    ReductionCoeffs prev = coeffs(0);
    for (std::size_t i = 1; i <= n; ++i) {
        const ReductionCoeffs cur = coeffs(i);
        for (std::size_t j = 0; j < 4; ++j) {
            GeneratorVector expected;
            expected[4 + j] = cur.a;
            expected[4 + (j + 1) % 4] = cur.b;
            expected[4 + (j + 3) % 4] = cur.b;
            expected[4 + (j + 2) % 4] = cur.c;
            expected[j] = -prev.a;
            expected[(j + 1) % 4] = -prev.b;
            expected[(j + 3) % 4] = -prev.b;
            expected[(j + 2) % 4] = -prev.c;
            if (layers[i][j] != expected)
                return false;
        }
        prev = cur;
    }
    return true;
}

} // namespace sandpile
