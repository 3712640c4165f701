#include "mce/ranking.hpp"

#include <algorithm>

namespace mce {

RankAssignment degree_ranking(const Graph& g) {
    RankAssignment r;
    r.metric.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) r.metric[v] = g.degree(v);
    return r;
}

RankAssignment triangle_ranking(const Graph& g) {
    RankAssignment r;
    r.metric.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t twice = 0;
        for (VertexId u : g.neighbors(v)) {
            // |Gamma(u) cap Gamma(v)|, scanning the smaller neighborhood
            VertexId small = g.degree(u) <= g.degree(v) ? u : v;
            VertexId large = small == u ? v : u;
            for (VertexId w : g.neighbors(small))
                if (g.has_edge(large, w)) ++twice;
        }
        r.metric[v] = twice / 2;
    }
    return r;
}

RankAssignment degeneracy_ranking(const Graph& g) {
    const std::size_t n = g.vertex_count();
    RankAssignment r;
    r.metric.resize(n, 0);
    if (n == 0) return r;

    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // bucket queue keyed by current degree
    std::vector<std::vector<VertexId>> bucket(max_deg + 1);
    std::vector<std::size_t> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        pos[v] = bucket[deg[v]].size();
        bucket[deg[v]].push_back(v);
    }

    std::vector<bool> removed(n, false);
    std::size_t core = 0;
    std::size_t cursor = 0;  // smallest possibly-nonempty bucket
    for (std::size_t peeled = 0; peeled < n; ++peeled) {
        while (bucket[cursor].empty()) ++cursor;
        VertexId v = bucket[cursor].back();
        bucket[cursor].pop_back();
        core = std::max(core, cursor);
        r.metric[v] = core;
        removed[v] = true;
        for (VertexId w : g.neighbors(v)) {
            if (removed[w]) continue;
            auto& b = bucket[deg[w]];
            // swap-remove w from its bucket
            VertexId moved = b.back();
            b[pos[w]] = moved;
            pos[moved] = pos[w];
            b.pop_back();
            --deg[w];
            pos[w] = bucket[deg[w]].size();
            bucket[deg[w]].push_back(w);
            // w may now live below the cursor; pull it back so the next peel
            // starts from the true minimum
            cursor = std::min(cursor, deg[w]);
        }
    }
    return r;
}

RankAssignment compute_ranking(const Graph& g, RankingKind kind) {
    switch (kind) {
        case RankingKind::Degree: return degree_ranking(g);
        case RankingKind::Triangle: return triangle_ranking(g);
        case RankingKind::Degeneracy: return degeneracy_ranking(g);
    }
    return {};
}

}  // namespace mce
