#include "mce/dynamic.hpp"

#include <algorithm>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "mce/sink.hpp"

namespace mce {

CliqueIndex::CliqueIndex(std::vector<Clique> cliques) {
    for (auto& c : cliques) set_.insert(std::move(c));
}

bool CliqueIndex::contains(const Clique& c) const {
    std::lock_guard lock(mu_);
    return set_.count(c) != 0;
}

bool CliqueIndex::insert(const Clique& c) {
    std::lock_guard lock(mu_);
    return set_.insert(c).second;
}

bool CliqueIndex::try_remove(const Clique& c) {
    std::lock_guard lock(mu_);
    return set_.erase(c) != 0;
}

std::size_t CliqueIndex::size() const {
    std::lock_guard lock(mu_);
    return set_.size();
}

std::vector<Clique> CliqueIndex::sorted() const {
    std::lock_guard lock(mu_);
    std::vector<Clique> out(set_.begin(), set_.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// One batch-edge subproblem of the new-clique enumeration: maximal cliques
// of g_after containing {u, v}, restricted to the common neighborhood, with
// the batch prefix excluded. Decomposed per vertex (degree ranking of the
// local subgraph) before handing off to the parallel exclusion search.
void enumerate_edge_subproblem(const Graph& g_after, const Edge& e,
                               std::size_t prefix, const ExcludedEdges& excl,
                               CliqueSink& sink, const ParallelConfig& cfg) {
    const VertexId u = e.u;
    const VertexId v = e.v;
    std::vector<VertexId> common;
    for (VertexId w : g_after.neighbors(u))
        if (w != v && g_after.has_edge(v, w)) common.push_back(w);

    if (common.empty()) {
        Clique k{std::min(u, v), std::max(u, v)};
        sink.emit(k);  // {u, v} is maximal: no common neighbor extends it
        return;
    }

    std::vector<VertexId> scope = common;
    scope.push_back(u);
    scope.push_back(v);
    Graph local = induced_subgraph(g_after, scope);
    RankAssignment rank = degree_ranking(local);

    Clique base{std::min(u, v), std::max(u, v)};
    tbb::parallel_for(
        tbb::blocked_range<std::size_t>(0, common.size(), 1),
        [&](const tbb::blocked_range<std::size_t>& r) {
            for (std::size_t i = r.begin(); i != r.end(); ++i) {
                VertexId w = common[i];
                // w closing an excluded edge with {u,v} owns no clique here;
                // lower-ranked peers already see it through their fini sets
                if (excl.blocks(w, base, prefix)) continue;

                SearchState s;
                s.clique = base;
                detail::sorted_insert(s.clique, w);
                for (VertexId x : common) {
                    if (x == w || !local.has_edge(w, x)) continue;
                    if (rank.greater(x, w))
                        s.cand.push_back(x);
                    else
                        s.fini.push_back(x);
                }
                detail::par_ttt_recurse(local, s.clique, s.cand, s.fini, &excl,
                                        prefix, sink, cfg);
            }
        });
}

}  // namespace

std::vector<Clique> par_imce_new(const Graph& g_after, const EdgeBatch& h,
                                 const ParallelConfig& cfg) {
    CollectingSink collected;
    ExcludedEdges excl(h.edges);

    tbb::task_arena arena(static_cast<int>(cfg.thread_count));
    arena.execute([&] {
        tbb::parallel_for(
            tbb::blocked_range<std::size_t>(0, h.edges.size(), 1),
            [&](const tbb::blocked_range<std::size_t>& r) {
                for (std::size_t i = r.begin(); i != r.end(); ++i)
                    enumerate_edge_subproblem(g_after, h.edges[i], i, excl,
                                              collected, cfg);
            });
    });
    return collected.sorted();
}

std::vector<Clique> par_imce_sub(const EdgeBatch& h, CliqueIndex& index,
                                 const std::vector<Clique>& new_cliques,
                                 const ParallelConfig& cfg) {
    std::vector<Clique> subsumed;
    std::mutex out_mu;

    tbb::task_arena arena(static_cast<int>(cfg.thread_count));
    arena.execute([&] {
        tbb::parallel_for(
            tbb::blocked_range<std::size_t>(0, new_cliques.size(), 1),
            [&](const tbb::blocked_range<std::size_t>& r) {
                for (std::size_t ci = r.begin(); ci != r.end(); ++ci) {
                    const Clique& c = new_cliques[ci];
                    auto in_c = [&](VertexId x) {
                        return std::binary_search(c.begin(), c.end(), x);
                    };

                    std::unordered_set<Clique, CliqueHash> cands{c};
                    for (const Edge& e : h.edges) {
                        if (!in_c(e.u) || !in_c(e.v)) continue;
                        std::unordered_set<Clique, CliqueHash> next;
                        for (const Clique& cc : cands) {
                            bool has_u = std::binary_search(cc.begin(), cc.end(), e.u);
                            bool has_v = std::binary_search(cc.begin(), cc.end(), e.v);
                            if (has_u && has_v) {
                                Clique c1 = cc, c2 = cc;
                                detail::sorted_erase(c1, e.u);
                                detail::sorted_erase(c2, e.v);
                                next.insert(std::move(c1));
                                next.insert(std::move(c2));
                            } else {
                                next.insert(cc);
                            }
                        }
                        cands = std::move(next);
                    }

                    for (const Clique& cc : cands) {
                        if (index.try_remove(cc)) {
                            std::lock_guard lock(out_mu);
                            subsumed.push_back(cc);
                        }
                    }
                }
            });
    });
    std::sort(subsumed.begin(), subsumed.end());
    return subsumed;
}

DynamicEngine DynamicEngine::from_graph(Graph g) {
    CollectingSink sink;
    ttt(g, SearchState::initial(g), sink);
    return DynamicEngine(std::move(g), sink.sorted());
}

CliqueDelta DynamicEngine::step_impl(const std::vector<Edge>& raw,
                                     const ParallelConfig& cfg) {
    EdgeBatch h = EdgeBatch::normalize(graph_, raw);
    CliqueDelta delta;
    if (h.empty()) return delta;

    Graph after = apply_batch(graph_, h);
    delta.new_cliques = par_imce_new(after, h, cfg);
    delta.subsumed = par_imce_sub(h, index_, delta.new_cliques, cfg);

    // commit: par_imce_sub already dropped the subsumed entries
    for (const Clique& c : delta.new_cliques) index_.insert(c);
    graph_ = std::move(after);
    return delta;
}

CliqueDelta DynamicEngine::step(const std::vector<Edge>& raw, const ParallelConfig& cfg) {
    return step_impl(raw, cfg);
}

CliqueDelta DynamicEngine::seq_step(const std::vector<Edge>& raw) {
    ParallelConfig serial;
    serial.thread_count = 1;
    return step_impl(raw, serial);
}

std::vector<Clique> DynamicEngine::step_count_only(const std::vector<Edge>& raw,
                                                   const ParallelConfig& cfg) {
    EdgeBatch h = EdgeBatch::normalize(graph_, raw);
    if (h.empty()) return {};
    Graph after = apply_batch(graph_, h);
    auto fresh = par_imce_new(after, h, cfg);
    graph_ = std::move(after);
    return fresh;
}

}  // namespace mce
