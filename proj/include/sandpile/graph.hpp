#pragma once

#include "sandpile/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

namespace sandpile {

/// Undirected multigraph without self-loops. Edges are keyed by the ordered
/// pair (min, max) of their endpoints and carry a positive multiplicity.
class Multigraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Multigraph(std::size_t vertex_count);

    /// Adds `multiplicity` parallel edges between u and v.
    void add_edge(std::size_t u, std::size_t v, std::uint64_t multiplicity = 1);

    std::size_t vertex_count() const { return vertex_count_; }
    /// Number of edges counted with multiplicity.
    std::uint64_t edge_count() const;
    std::uint64_t multiplicity(std::size_t u, std::size_t v) const;
    std::uint64_t degree(std::size_t u) const;
    const std::map<Edge, std::uint64_t>& edges() const { return edges_; }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t vertex_count_;
    std::map<Edge, std::uint64_t> edges_;
};

Multigraph cycle(std::size_t n);

/// Vertex (u, v) of the product is numbered u + v * g1.vertex_count().
Multigraph cartesian_product(const Multigraph& g1, const Multigraph& g2);

/// C4 x Cn with vertex j of layer i numbered 4i + j.
Multigraph c4xcn(std::size_t n);

/// Degree matrix minus multi-adjacency matrix.
IntegerMatrix laplacian(const Multigraph& g);

} // namespace sandpile
