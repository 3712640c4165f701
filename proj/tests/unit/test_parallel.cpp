#include <doctest.h>

#include <random>

#include "mce/oracle.hpp"
#include "mce/parallel.hpp"
#include "unit/test_util.hpp"

using namespace mce;

namespace {

ParallelConfig cfg_with(std::size_t threads, std::size_t grain = 16) {
    ParallelConfig cfg;
    cfg.thread_count = threads;
    cfg.grain_threshold = grain;
    return cfg;
}

std::vector<Clique> run_par_ttt(const Graph& g, std::size_t threads,
                                std::size_t grain = 16) {
    CollectingSink sink;
    par_ttt(g, SearchState::initial(g), sink, cfg_with(threads, grain));
    CHECK(sink.duplicates() == 0);
    return sink.sorted();
}

std::vector<Clique> run_par_mce(const Graph& g, RankingKind kind,
                                std::size_t threads) {
    CollectingSink sink;
    par_mce(g, compute_ranking(g, kind), sink, cfg_with(threads));
    CHECK(sink.duplicates() == 0);
    return sink.sorted();
}

}  // namespace

TEST_CASE("par_pivot agrees with the sequential scan") {
    Graph tri = testutil::complete(3);
    CHECK(par_pivot(tri, {0, 1, 2}, {}) == 0);

    Graph star = Graph::from_edges(5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}});
    std::vector<VertexId> leaves{0, 1, 3, 4};
    CHECK(par_pivot(star, leaves, {2}) == 2);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_gnp(40, 0.3, rng);
        std::vector<VertexId> cand, fini;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            switch (rng() % 3) {
                case 0: cand.push_back(v); break;
                case 1: fini.push_back(v); break;
                default: break;
            }
        }
        if (cand.empty() && fini.empty()) continue;
        CHECK(par_pivot(g, cand, fini) == select_pivot(g, cand, fini));
    }
}

TEST_CASE("par_ttt output is thread-count invariant and oracle-exact") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = testutil::random_gnp(2 + rng() % 23, 0.1 + 0.2 * (rng() % 5), rng);
        auto expect = oracle_enumerate(g);
        for (std::size_t t : {1u, 2u, 4u, 8u})
            CHECK(run_par_ttt(g, t) == expect);
        // tiny grain forces the unrolled parallel path everywhere
        CHECK(run_par_ttt(g, 4, 0) == expect);
    }
}

TEST_CASE("par_ttt on the extremal multipartite family") {
    CHECK(run_par_ttt(testutil::moon_moser(3), 4, 0).size() == 27);
    CHECK(run_par_ttt(testutil::moon_moser(4), 4, 0).size() == 81);
}

TEST_CASE("per-vertex decomposition ownership") {
    // path a-b-c: under (degree,id) order b outranks both ends, so vertex a
    // owns {a,b}, vertex b owns nothing, vertex c owns {b,c}
    Graph p3 = testutil::path(3);
    std::vector<std::uint64_t> counts;
    CollectingSink sink;
    par_mce(p3, degree_ranking(p3), sink, cfg_with(2), &counts);
    CHECK(sink.sorted() == std::vector<Clique>{{0, 1}, {1, 2}});
    CHECK(counts == std::vector<std::uint64_t>{1, 0, 1});

    // a complete graph is one subproblem: the minimum-rank vertex owns it
    std::vector<std::uint64_t> counts4;
    CollectingSink sink4;
    Graph k4 = testutil::complete(4);
    par_mce(k4, degree_ranking(k4), sink4, cfg_with(2), &counts4);
    CHECK(sink4.size() == 1);
    CHECK(counts4 == std::vector<std::uint64_t>{1, 0, 0, 0});
}

TEST_CASE("par_mce exact under every ranking") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_gnp(2 + rng() % 23, 0.1 + 0.2 * (rng() % 5), rng);
        auto expect = oracle_enumerate(g);
        for (auto kind :
             {RankingKind::Degree, RankingKind::Triangle, RankingKind::Degeneracy})
            for (std::size_t t : {1u, 4u})
                CHECK(run_par_mce(g, kind, t) == expect);
    }
    CHECK(run_par_mce(testutil::moon_moser(3), RankingKind::Degeneracy, 4).size() == 27);
}

TEST_CASE("par_mce subproblem counts sum to the clique count") {
    std::mt19937 rng(43);
    Graph g = testutil::random_gnp(30, 0.3, rng);
    std::vector<std::uint64_t> counts;
    CountingSink sink;
    par_mce(g, degree_ranking(g), sink, cfg_with(4), &counts);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == sink.count());
}

TEST_CASE("par_ttt_exclude_edges equals the serial exclusion search") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::random_gnp(14, 0.5, rng);
        std::vector<Edge> all;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v : g.neighbors(u))
                if (u < v) all.push_back({u, v});
        if (all.size() < 3) continue;
        std::shuffle(all.begin(), all.end(), rng);
        ExcludedEdges excl({all[0], all[1], all[2]});

        CollectingSink serial, parallel;
        ttt_exclude_edges(g, SearchState::initial(g), excl, 3, serial);
        par_ttt_exclude_edges(g, SearchState::initial(g), excl, 3, parallel,
                              cfg_with(4, 0));
        CHECK(parallel.duplicates() == 0);
        CHECK(parallel.sorted() == serial.sorted());
    }
}
