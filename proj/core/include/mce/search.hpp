#pragma once

#include <unordered_map>
#include <vector>

#include "mce/graph.hpp"
#include "mce/sink.hpp"
#include "mce/types.hpp"

namespace mce {

// The (K, cand, fini) triple of a backtracking call. All three are kept in
// ascending id order; K is a clique, cand/fini vertices are adjacent to all
// of K, and the three sets are pairwise disjoint.
struct SearchState {
    Clique clique;               // K
    std::vector<VertexId> cand;  // extendable
    std::vector<VertexId> fini;  // adjacent to K but barred from extension

    static SearchState initial(const Graph& g);
};

// Edges that may not appear inside any emitted clique, as a vertex -> partner
// map. Partners carry the batch index of their edge so one structure serves
// every exclusion prefix e1..e_{i-1}.
class ExcludedEdges {
public:
    ExcludedEdges() = default;
    explicit ExcludedEdges(const std::vector<Edge>& edges);

    // Edges with index < limit are active. An unlimited view uses all edges.
    bool empty(std::size_t limit) const { return limit == 0 || map_.empty(); }

    // True when adding q to the clique K would close an active excluded edge.
    bool blocks(VertexId q, const Clique& k, std::size_t limit) const;

    // True when K itself already contains an active excluded edge.
    bool violates(const Clique& k, std::size_t limit) const;

    std::size_t edge_count() const { return count_; }

private:
    struct Partner {
        VertexId v;
        std::size_t index;
    };
    std::unordered_map<VertexId, std::vector<Partner>> map_;
    std::size_t count_ = 0;
};

// Pivot maximizing |cand cap Gamma(u)| over cand u fini, smallest id on
// ties. Sequential scan; the parallel variant in par_pivot must agree.
VertexId select_pivot(const Graph& g, const std::vector<VertexId>& cand,
                      const std::vector<VertexId>& fini);

// Pivoted backtracking enumeration: emits exactly the maximal cliques of g
// that contain K, extend only into cand, and avoid fini. With the initial
// state this is C(G). The empty clique (n = 0 start) is never emitted.
void ttt(const Graph& g, const SearchState& state, CliqueSink& sink);

// As ttt, but no emitted clique contains an excluded edge; a branch vertex
// that would close one moves cand -> fini instead of being explored, which
// also suppresses cliques only "maximal" because the excluded superset is
// skipped. Throws std::invalid_argument when K already contains an excluded
// edge. `limit` selects the active prefix (use excl.edge_count() for all).
void ttt_exclude_edges(const Graph& g, const SearchState& state,
                       const ExcludedEdges& excl, std::size_t limit,
                       CliqueSink& sink);

// True iff c is a clique of g and no outside vertex is adjacent to all of c.
bool verify_maximal(const Graph& g, const Clique& c);

namespace detail {
// Shared recursion body, used by the sequential entry points above and as
// the small-state fallback of the parallel engine.
void ttt_recurse(const Graph& g, Clique& k, std::vector<VertexId> cand,
                 std::vector<VertexId> fini, const ExcludedEdges* excl,
                 std::size_t limit, CliqueSink& sink);

// sorted-vector helpers
std::vector<VertexId> intersect_neighbors(const Graph& g, VertexId q,
                                          const std::vector<VertexId>& s);
void sorted_insert(std::vector<VertexId>& s, VertexId v);
void sorted_erase(std::vector<VertexId>& s, VertexId v);
}  // namespace detail

}  // namespace mce
