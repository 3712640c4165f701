#include "mce/graph.hpp"

#include <algorithm>

namespace mce {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

bool Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) return false;
    if (u >= adj_hash_.size() || v >= adj_hash_.size())
        throw std::invalid_argument("vertex id out of range");
    if (!adj_hash_[u].insert(v).second) return false;
    adj_hash_[v].insert(u);
    auto& su = adj_sorted_[u];
    su.insert(std::lower_bound(su.begin(), su.end(), v), v);
    auto& sv = adj_sorted_[v];
    sv.insert(std::lower_bound(sv.begin(), sv.end(), u), u);
    ++m_;
    return true;
}

EdgeBatch EdgeBatch::normalize(const Graph& g, const std::vector<Edge>& raw) {
    EdgeBatch b;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw.size() * 2);
    for (const Edge& e : raw) {
        VertexId u = std::min(e.u, e.v);
        VertexId v = std::max(e.u, e.v);
        if (u == v) {
            ++b.filtered;
            continue;
        }
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        if (g.has_edge(u, v) || !seen.insert(key).second) {
            ++b.filtered;
            continue;
        }
        b.edges.push_back({u, v});
    }
    return b;
}

Graph apply_batch(const Graph& g, const EdgeBatch& h) {
    Graph out = g;
    for (const Edge& e : h.edges) out.add_edge(e.u, e.v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    Graph out(g.vertex_count());
    out.set_labels(g.labels());
    std::unordered_set<VertexId> keep(vertices.begin(), vertices.end());
    for (VertexId v : vertices) {
        if (v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
        for (VertexId w : g.neighbors(v))
            if (w > v && keep.count(w)) out.add_edge(v, w);
    }
    return out;
}

}  // namespace mce
