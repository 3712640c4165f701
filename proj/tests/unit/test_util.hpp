#pragma once

#include <random>
#include <vector>

#include "mce/graph.hpp"

namespace mce::testutil {

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<VertexId>(v + 1)});
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v)
        edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
    return Graph::from_edges(n, edges);
}

// Complete multipartite graph with k parts of 3 (3^k maximal cliques).
inline Graph moon_moser(std::size_t k) {
    std::size_t n = 3 * k;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (u / 3 != v / 3) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline Graph random_gnp(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

}  // namespace mce::testutil
