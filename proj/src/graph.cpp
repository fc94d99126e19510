#include "radon_nets/graph.hpp"

namespace radon_nets {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const VertexSet& row : adjacency_)
        twice += row.count();
    return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v)
        return;
    adjacency_[u].set(v);
    adjacency_[v].set(u);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (std::size_t v = adjacency_[u].find_next(u); v != VertexSet::npos; v = adjacency_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                out.add_edge(i, j);
    return out;
}

} // namespace radon_nets
