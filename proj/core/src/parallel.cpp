#include "mce/parallel.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_reduce.h>
#include <tbb/task_arena.h>
#include <tbb/task_group.h>

namespace mce {

namespace {

std::size_t cand_intersection_size(const Graph& g, const std::vector<VertexId>& cand,
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

struct PivotChoice {
    bool have = false;
    VertexId v = 0;
    std::size_t t = 0;

    void consider(VertexId w, std::size_t tw) {
        if (!have || tw > t || (tw == t && w < v)) {
            have = true;
            v = w;
            t = tw;
        }
    }
    void merge(const PivotChoice& o) {
        if (o.have) consider(o.v, o.t);
    }
};

}  // namespace

VertexId par_pivot(const Graph& g, const std::vector<VertexId>& cand,
                   const std::vector<VertexId>& fini) {
    if (cand.empty() && fini.empty())
        throw std::invalid_argument("par_pivot: empty cand and fini");

    // ascending union of the two sorted sets
    std::vector<VertexId> pool;
    pool.reserve(cand.size() + fini.size());
    std::merge(cand.begin(), cand.end(), fini.begin(), fini.end(),
               std::back_inserter(pool));

    PivotChoice best = tbb::parallel_reduce(
        tbb::blocked_range<std::size_t>(0, pool.size()), PivotChoice{},
        [&](const tbb::blocked_range<std::size_t>& r, PivotChoice acc) {
            for (std::size_t i = r.begin(); i != r.end(); ++i)
                acc.consider(pool[i], cand_intersection_size(g, cand, pool[i]));
            return acc;
        },
        [](PivotChoice a, const PivotChoice& b) {
            a.merge(b);
            return a;
        });
    return best.v;
}

namespace detail {

void par_ttt_recurse(const Graph& g, const Clique& k, std::vector<VertexId> cand,
                     std::vector<VertexId> fini, const ExcludedEdges* excl,
                     std::size_t limit, CliqueSink& sink, const ParallelConfig& cfg) {
    if (cand.size() + fini.size() < cfg.grain_threshold) {
        Clique local = k;
        ttt_recurse(g, local, std::move(cand), std::move(fini), excl, limit, sink);
        return;
    }
    if (cand.empty() && fini.empty()) {
        if (!k.empty()) sink.emit(k);
        return;
    }
    if (cand.empty()) return;

    VertexId pivot = par_pivot(g, cand, fini);
    std::vector<VertexId> ext;
    for (VertexId q : cand)
        if (!g.has_edge(pivot, q)) ext.push_back(q);

    // position-in-ext map: iteration i treats ext[0..i-1] as moved to fini
    std::unordered_map<VertexId, std::size_t> pos;
    pos.reserve(ext.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos.emplace(ext[i], i);

    tbb::task_group tg;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        tg.run([&, i] {
            VertexId q = ext[i];
            if (excl && excl->blocks(q, k, limit)) return;  // abandon this branch

            std::vector<VertexId> cand_q, fini_q;
            for (VertexId w : g.neighbors(q)) {
                auto it = pos.find(w);
                bool in_prefix = it != pos.end() && it->second < i;
                if (in_prefix) {
                    fini_q.push_back(w);
                } else if (std::binary_search(cand.begin(), cand.end(), w)) {
                    cand_q.push_back(w);
                } else if (std::binary_search(fini.begin(), fini.end(), w)) {
                    fini_q.push_back(w);
                }
            }
            // neighbors(q) is ascending, so both sets come out sorted
            Clique k_q = k;
            sorted_insert(k_q, q);
            par_ttt_recurse(g, k_q, std::move(cand_q), std::move(fini_q), excl,
                            limit, sink, cfg);
        });
    }
    tg.wait();
}

}  // namespace detail

namespace {

void run_in_arena(const ParallelConfig& cfg, const std::function<void()>& body) {
    tbb::task_arena arena(static_cast<int>(cfg.thread_count));
    arena.execute(body);
}

}  // namespace

void par_ttt(const Graph& g, const SearchState& state, CliqueSink& sink,
             const ParallelConfig& cfg) {
    run_in_arena(cfg, [&] {
        detail::par_ttt_recurse(g, state.clique, state.cand, state.fini, nullptr, 0,
                                sink, cfg);
    });
}

void par_ttt_exclude_edges(const Graph& g, const SearchState& state,
                           const ExcludedEdges& excl, std::size_t limit,
                           CliqueSink& sink, const ParallelConfig& cfg) {
    if (excl.violates(state.clique, limit))
        throw std::invalid_argument("par_ttt_exclude_edges: K contains an excluded edge");
    run_in_arena(cfg, [&] {
        detail::par_ttt_recurse(g, state.clique, state.cand, state.fini, &excl, limit,
                                sink, cfg);
    });
}

void par_mce(const Graph& g, const RankAssignment& ranking, CliqueSink& sink,
             const ParallelConfig& cfg,
             std::vector<std::uint64_t>* subproblem_counts) {
    const std::size_t n = g.vertex_count();
    if (subproblem_counts) subproblem_counts->assign(n, 0);

    run_in_arena(cfg, [&] {
        tbb::parallel_for(
            tbb::blocked_range<VertexId>(0, static_cast<VertexId>(n), 1),
            [&](const tbb::blocked_range<VertexId>& r) {
                for (VertexId v = r.begin(); v != r.end(); ++v) {
                    auto nbrs = g.neighbors(v);
                    std::vector<VertexId> scope(nbrs.begin(), nbrs.end());
                    scope.push_back(v);
                    Graph gv = induced_subgraph(g, scope);

                    SearchState s;
                    s.clique = {v};
                    for (VertexId w : nbrs) {
                        if (ranking.greater(w, v))
                            s.cand.push_back(w);
                        else
                            s.fini.push_back(w);
                    }

                    struct Tee final : CliqueSink {
                        Tee(CliqueSink& a, CliqueSink& b) : a_(a), b_(b) {}
                        void emit(const Clique& c) override {
                            a_.emit(c);
                            b_.emit(c);
                        }
                        CliqueSink& a_;
                        CliqueSink& b_;
                    };
                    if (subproblem_counts) {
                        CountingSink tally;
                        Tee tee(sink, tally);
                        detail::par_ttt_recurse(gv, s.clique, s.cand, s.fini, nullptr,
                                                0, tee, cfg);
                        (*subproblem_counts)[v] = tally.count();
                    } else {
                        detail::par_ttt_recurse(gv, s.clique, s.cand, s.fini, nullptr,
                                                0, sink, cfg);
                    }
                }
            });
    });
}

}  // namespace mce
