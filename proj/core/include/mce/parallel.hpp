#pragma once

#include <cstddef>
#include <thread>
#include <vector>

#include "mce/graph.hpp"
#include "mce/ranking.hpp"
#include "mce/search.hpp"
#include "mce/sink.hpp"

namespace mce {

struct ParallelConfig {
    // bound on worker threads for the task pool
    std::size_t thread_count = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    // states with |cand| + |fini| below this run the sequential search
    std::size_t grain_threshold = 16;
};

// Parallel pivot selection: per-vertex intersection sizes and the argmax are
// computed as parallel reductions. Returns the same vertex as select_pivot
// (max |cand cap Gamma(u)|, smallest id on ties) for every input.
VertexId par_pivot(const Graph& g, const std::vector<VertexId>& cand,
                   const std::vector<VertexId>& fini);

// Loop-unrolled parallel backtracking: iteration i of ext rebuilds its cand
// and fini independently of siblings (ext prefix folded into fini), so all
// branch tasks run concurrently under a work-stealing pool. Output set equals
// ttt on the same state, at every thread count.
void par_ttt(const Graph& g, const SearchState& state, CliqueSink& sink,
             const ParallelConfig& cfg);

// Parallel variant of the exclusion search; same output set as
// ttt_exclude_edges. An iteration whose branch vertex closes an excluded
// edge is abandoned (the unrolling already places it in sibling fini sets).
void par_ttt_exclude_edges(const Graph& g, const SearchState& state,
                           const ExcludedEdges& excl, std::size_t limit,
                           CliqueSink& sink, const ParallelConfig& cfg);

// Per-vertex decomposition: each vertex v owns the maximal cliques whose
// minimum-rank member is v, enumerated with par_ttt over the subgraph
// induced by Gamma(v) u {v}. subproblem_counts, when non-null, receives the
// per-vertex emission counts (size n, caller-zeroed or empty).
void par_mce(const Graph& g, const RankAssignment& ranking, CliqueSink& sink,
             const ParallelConfig& cfg,
             std::vector<std::uint64_t>* subproblem_counts = nullptr);

namespace detail {
// Arena-free recursion bodies for callers already inside the task pool.
void par_ttt_recurse(const Graph& g, const Clique& k, std::vector<VertexId> cand,
                     std::vector<VertexId> fini, const ExcludedEdges* excl,
                     std::size_t limit, CliqueSink& sink, const ParallelConfig& cfg);
}  // namespace detail

}  // namespace mce
