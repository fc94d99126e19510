#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace radon_nets {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertices) : adjacency_(vertices, VertexSet(vertices)) {}

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
    const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Subgraph induced on `vertices`, renumbered in the given order.
    Graph induced(const std::vector<std::size_t>& vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adjacency_;
};

/// Default vertex cap for exact coloring and Kneser construction.
inline constexpr std::size_t kDefaultVertexCap = 64;

} // namespace radon_nets
