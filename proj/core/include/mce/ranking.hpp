#pragma once

#include <cstdint>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

// Total order over vertices: rank(v) > rank(w) iff metric(v) > metric(w),
// or metrics equal and id(v) > id(w).
struct RankAssignment {
    std::vector<std::uint64_t> metric;

    bool less(VertexId v, VertexId w) const {
        if (metric[v] != metric[w]) return metric[v] < metric[w];
        return v < w;
    }
    bool greater(VertexId v, VertexId w) const { return less(w, v); }
};

// metric(v) = |Gamma(v)|
RankAssignment degree_ranking(const Graph& g);

// metric(v) = number of triangles containing v; sequential adjacency
// intersection, t(v) = (sum over u in Gamma(v) of |Gamma(u) cap Gamma(v)|)/2.
RankAssignment triangle_ranking(const Graph& g);

// metric(v) = core number of v, via O(n+m) bucket-queue peeling.
RankAssignment degeneracy_ranking(const Graph& g);

enum class RankingKind { Degree, Triangle, Degeneracy };

RankAssignment compute_ranking(const Graph& g, RankingKind kind);

}  // namespace mce
