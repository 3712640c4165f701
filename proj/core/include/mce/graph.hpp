#pragma once

#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mce/types.hpp"

namespace mce {

struct Edge {
    VertexId u;
    VertexId v;
};

// Simple undirected graph over dense vertex ids. Adjacency is stored twice:
// a hash set per vertex (membership queries) and a sorted neighbor vector
// (deterministic iteration). The hashed view is the source of truth; the
// sorted mirror is rebuilt on every mutation.
//
// Immutable after construction; safe for unrestricted concurrent reads.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_hash_(n), adj_sorted_(n) {}

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t vertex_count() const { return adj_sorted_.size(); }
    std::size_t edge_count() const { return m_; }

    std::size_t degree(VertexId v) const { return adj_sorted_[v].size(); }

    // Sorted ascending.
    std::span<const VertexId> neighbors(VertexId v) const { return adj_sorted_[v]; }

    bool has_edge(VertexId u, VertexId v) const {
        return adj_hash_[u].count(v) != 0;
    }

    // Inserts an edge; ignores self-loops and duplicates. Returns true when
    // the edge was actually added. Only callers constructing a new graph
    // version may use this (see apply_batch).
    bool add_edge(VertexId u, VertexId v);

    // Label bookkeeping (dense id <-> external label). Graphs built
    // programmatically default to label(v) == v.
    VertexLabel label(VertexId v) const {
        return labels_.empty() ? static_cast<VertexLabel>(v) : labels_[v];
    }
    void set_labels(std::vector<VertexLabel> labels) { labels_ = std::move(labels); }
    const std::vector<VertexLabel>& labels() const { return labels_; }

private:
    std::vector<std::unordered_set<VertexId>> adj_hash_;
    std::vector<std::vector<VertexId>> adj_sorted_;
    std::vector<VertexLabel> labels_;
    std::size_t m_ = 0;
};

// A normalized batch of edge insertions. The stored order is the exclusion
// order e1..erho used by the incremental algorithms.
struct EdgeBatch {
    std::vector<Edge> edges;
    std::size_t filtered = 0;  // self-loops / duplicates / already-present dropped

    std::size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }

    // Filters raw pairs against g: drops self-loops, in-batch duplicates
    // (in either orientation) and edges already present in g. Input order of
    // the survivors is preserved.
    static EdgeBatch normalize(const Graph& g, const std::vector<Edge>& raw);
};

// Returns g plus the batch. g itself is left untouched so callers can hold
// both versions during a dynamic step.
Graph apply_batch(const Graph& g, const EdgeBatch& h);

// Subgraph of g induced by `vertices`. Vertex ids are preserved (the result
// has the same vertex count; vertices outside the set are isolated).
// Throws std::invalid_argument on an out-of-range id.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

}  // namespace mce
