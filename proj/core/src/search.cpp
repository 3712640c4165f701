#include "mce/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace mce {

SearchState SearchState::initial(const Graph& g) {
    SearchState s;
    s.cand.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) s.cand[v] = v;
    return s;
}

ExcludedEdges::ExcludedEdges(const std::vector<Edge>& edges) : count_(edges.size()) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        map_[edges[i].u].push_back({edges[i].v, i});
        map_[edges[i].v].push_back({edges[i].u, i});
    }
}

bool ExcludedEdges::blocks(VertexId q, const Clique& k, std::size_t limit) const {
    auto it = map_.find(q);
    if (it == map_.end()) return false;
    for (const Partner& p : it->second)
        if (p.index < limit && std::binary_search(k.begin(), k.end(), p.v)) return true;
    return false;
}

bool ExcludedEdges::violates(const Clique& k, std::size_t limit) const {
    for (VertexId v : k) {
        auto it = map_.find(v);
        if (it == map_.end()) continue;
        for (const Partner& p : it->second)
            if (p.index < limit && p.v > v && std::binary_search(k.begin(), k.end(), p.v))
                return true;
    }
    return false;
}

namespace detail {

void sorted_insert(std::vector<VertexId>& s, VertexId v) {
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
}

void sorted_erase(std::vector<VertexId>& s, VertexId v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
}

std::vector<VertexId> intersect_neighbors(const Graph& g, VertexId q,
                                          const std::vector<VertexId>& s) {
    std::vector<VertexId> out;
    if (s.size() <= g.degree(q)) {
        out.reserve(s.size());
        for (VertexId w : s)
            if (g.has_edge(q, w)) out.push_back(w);
    } else {
        for (VertexId w : g.neighbors(q))
            if (std::binary_search(s.begin(), s.end(), w)) out.push_back(w);
    }
    return out;
}

// |cand cap Gamma(w)| by scanning whichever side is smaller.
static std::size_t intersection_size(const Graph& g, const std::vector<VertexId>& cand,
                                     VertexId w) {
    std::size_t t = 0;
    if (cand.size() <= g.degree(w)) {
        for (VertexId x : cand)
            if (g.has_edge(w, x)) ++t;
    } else {
        for (VertexId x : g.neighbors(w))
            if (std::binary_search(cand.begin(), cand.end(), x)) ++t;
    }
    return t;
}

void ttt_recurse(const Graph& g, Clique& k, std::vector<VertexId> cand,
                 std::vector<VertexId> fini, const ExcludedEdges* excl,
                 std::size_t limit, CliqueSink& sink) {
    if (cand.empty() && fini.empty()) {
        if (!k.empty()) sink.emit(k);
        return;
    }
    if (cand.empty()) return;

    VertexId pivot = select_pivot(g, cand, fini);
    std::vector<VertexId> ext;
    for (VertexId q : cand)
        if (!g.has_edge(pivot, q)) ext.push_back(q);

    for (VertexId q : ext) {
        if (excl && excl->blocks(q, k, limit)) {
            // q would close an excluded edge: bar it from extension so the
            // sibling branches still see it as a maximality witness
            sorted_erase(cand, q);
            sorted_insert(fini, q);
            continue;
        }
        auto cand_q = intersect_neighbors(g, q, cand);
        auto fini_q = intersect_neighbors(g, q, fini);
        sorted_insert(k, q);
        ttt_recurse(g, k, std::move(cand_q), std::move(fini_q), excl, limit, sink);
        sorted_erase(k, q);
        sorted_erase(cand, q);
        sorted_insert(fini, q);
    }
}

}  // namespace detail

VertexId select_pivot(const Graph& g, const std::vector<VertexId>& cand,
                      const std::vector<VertexId>& fini) {
    if (cand.empty() && fini.empty())
        throw std::invalid_argument("select_pivot: empty cand and fini");
    bool have = false;
    VertexId best = 0;
    std::size_t best_t = 0;
    // merge-walk the two sorted sets so ties resolve to the smallest id
    std::size_t i = 0, j = 0;
    while (i < cand.size() || j < fini.size()) {
        VertexId w;
        if (j >= fini.size() || (i < cand.size() && cand[i] < fini[j]))
            w = cand[i++];
        else
            w = fini[j++];
        std::size_t t = detail::intersection_size(g, cand, w);
        if (!have || t > best_t) {
            have = true;
            best = w;
            best_t = t;
        }
    }
    return best;
}

void ttt(const Graph& g, const SearchState& state, CliqueSink& sink) {
    Clique k = state.clique;
    detail::ttt_recurse(g, k, state.cand, state.fini, nullptr, 0, sink);
}

void ttt_exclude_edges(const Graph& g, const SearchState& state,
                       const ExcludedEdges& excl, std::size_t limit,
                       CliqueSink& sink) {
    if (excl.violates(state.clique, limit))
        throw std::invalid_argument("ttt_exclude_edges: K contains an excluded edge");
    Clique k = state.clique;
    detail::ttt_recurse(g, k, state.cand, state.fini, &excl, limit, sink);
}

bool verify_maximal(const Graph& g, const Clique& c) {
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.has_edge(c[i], c[j])) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(c.begin(), c.end(), v)) continue;
        bool all = true;
        for (VertexId u : c)
            if (!g.has_edge(v, u)) {
                all = false;
                break;
            }
        if (all) return false;
    }
    return true;
}

}  // namespace mce
