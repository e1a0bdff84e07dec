#include "sandpile/graph.hpp"

#include <stdexcept>
#include <string>

namespace sandpile {

Multigraph::Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count)
{
    if (vertex_count == 0)
        throw std::invalid_argument("a graph needs at least one vertex");
}

void Multigraph::add_edge(std::size_t u, std::size_t v, std::uint64_t multiplicity)
{
    if (u >= vertex_count_ || v >= vertex_count_)
        throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v)
                                + ") references a vertex outside [0, " + std::to_string(vertex_count_) + ")");
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (multiplicity == 0)
        throw std::invalid_argument("edge multiplicity must be positive");
    edges_[{std::min(u, v), std::max(u, v)}] += multiplicity;
}

std::uint64_t Multigraph::edge_count() const
{
    std::uint64_t total = 0;
    for (const auto& [edge, mult] : edges_)
        total += mult;
    return total;
}

std::uint64_t Multigraph::multiplicity(std::size_t u, std::size_t v) const
{
    auto it = edges_.find({std::min(u, v), std::max(u, v)});
    return it == edges_.end() ? 0 : it->second;
}

std::uint64_t Multigraph::degree(std::size_t u) const
{
    std::uint64_t d = 0;
    for (const auto& [edge, mult] : edges_)
        if (edge.first == u || edge.second == u)
            d += mult;
    return d;
}

Multigraph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    Multigraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph cartesian_product(const Multigraph& g1, const Multigraph& g2)
{
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    Multigraph product(n1 * n2);
    // Copies of g1 inside every g2 fibre.
    for (std::size_t v = 0; v < n2; ++v)
        for (const auto& [edge, mult] : g1.edges())
            product.add_edge(edge.first + v * n1, edge.second + v * n1, mult);
    // Copies of g2 inside every g1 fibre.
    for (std::size_t u = 0; u < n1; ++u)
        for (const auto& [edge, mult] : g2.edges())
            product.add_edge(u + edge.first * n1, u + edge.second * n1, mult);
    return product;
}

Multigraph c4xcn(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("C4 x Cn needs n >= 3, got " + std::to_string(n));
    Multigraph g(4 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            g.add_edge(4 * i + j, 4 * i + (j + 1) % 4);
            g.add_edge(4 * i + j, 4 * ((i + 1) % n) + j);
        }
    return g;
}

IntegerMatrix laplacian(const Multigraph& g)
{
    const std::size_t n = g.vertex_count();
    IntegerMatrix lap(n, n);
    for (const auto& [edge, mult] : g.edges()) {
        const Integer a(static_cast<unsigned long>(mult));
        lap(edge.first, edge.second) -= a;
        lap(edge.second, edge.first) -= a;
        lap(edge.first, edge.first) += a;
        lap(edge.second, edge.second) += a;
    }
    return lap;
}

} // namespace sandpile
