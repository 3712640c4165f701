#pragma once

#include <mutex>
#include <unordered_set>
#include <vector>

#include "mce/graph.hpp"
#include "mce/parallel.hpp"
#include "mce/types.hpp"

namespace mce {

// Persistent, canonically-keyed set of currently-maximal cliques. Membership
// tests and removals are safe to call concurrently; try_remove is an atomic
// test-and-remove so concurrent subsumption of the same clique has exactly
// one winner.
class CliqueIndex {
public:
    CliqueIndex() = default;
    explicit CliqueIndex(std::vector<Clique> cliques);
    CliqueIndex(const CliqueIndex& o) : set_(o.snapshot()) {}
    CliqueIndex& operator=(const CliqueIndex& o) {
        if (this != &o) set_ = o.snapshot();
        return *this;
    }

    bool contains(const Clique& c) const;
    bool insert(const Clique& c);
    bool try_remove(const Clique& c);
    std::size_t size() const;
    std::vector<Clique> sorted() const;

private:
    std::unordered_set<Clique, CliqueHash> snapshot() const {
        std::lock_guard lock(mu_);
        return set_;
    }

    mutable std::mutex mu_;
    std::unordered_set<Clique, CliqueHash> set_;
};

// Per-batch change to the maximal clique set.
struct CliqueDelta {
    std::vector<Clique> new_cliques;  // C(G+H) \ C(G)
    std::vector<Clique> subsumed;     // C(G) \ C(G+H)
};

// Enumerates the new maximal cliques of g_after = g + h. Edge i's subproblem
// runs the exclusion search over the common neighborhood of its endpoints
// with edges e1..e_{i-1} excluded, so each new clique is emitted exactly
// once, by its minimum-index batch edge. Within an edge subproblem the
// search is further decomposed per vertex under a degree ranking of the
// local subgraph. `g_after` must equal apply_batch(g_before_unused, h); only
// the post-insertion graph is consulted.
std::vector<Clique> par_imce_new(const Graph& g_after, const EdgeBatch& h,
                                 const ParallelConfig& cfg);

// Enumerates the subsumed cliques: for every new clique, candidate old
// cliques are generated by stripping one endpoint of each contained batch
// edge; candidates found in the index are atomically moved out and reported.
// The index is mutated (entries removed).
std::vector<Clique> par_imce_sub(const EdgeBatch& h, CliqueIndex& index,
                                 const std::vector<Clique>& new_cliques,
                                 const ParallelConfig& cfg);

// Maintains (graph, index) with index == C(graph) across batched edge
// insertion. Construct from a graph plus its clique set; from_graph runs the
// sequential enumeration to seed the index. No enumeration overlaps a commit.
class DynamicEngine {
public:
    DynamicEngine(Graph g, std::vector<Clique> cliques)
        : graph_(std::move(g)), index_(std::move(cliques)) {}

    static DynamicEngine from_graph(Graph g);

    // Normalizes raw edge pairs against the current graph, computes the
    // delta, and commits graph <- graph + H, index <- index \ del u new.
    CliqueDelta step(const std::vector<Edge>& raw, const ParallelConfig& cfg);

    // Identical contract on a serial schedule; timing baseline.
    CliqueDelta seq_step(const std::vector<Edge>& raw);

    // As step, but the index is not maintained and subsumed cliques are not
    // computed (count-only mode for streams whose clique set exceeds memory).
    std::vector<Clique> step_count_only(const std::vector<Edge>& raw,
                                        const ParallelConfig& cfg);

    const Graph& graph() const { return graph_; }
    const CliqueIndex& index() const { return index_; }

private:
    CliqueDelta step_impl(const std::vector<Edge>& raw, const ParallelConfig& cfg);

    Graph graph_;
    CliqueIndex index_;
};

}  // namespace mce
