#include <doctest.h>

#include <random>

#include "mce/dynamic.hpp"
#include "mce/oracle.hpp"
#include "unit/test_util.hpp"

using namespace mce;

namespace {

ParallelConfig cfg_with(std::size_t threads) {
    ParallelConfig cfg;
    cfg.thread_count = threads;
    return cfg;
}

std::vector<Clique> sorted(std::vector<Clique> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// the running 5-vertex example: a=0, b=1, c=2, d=3, e=4
Graph example_graph() {
    return Graph::from_edges(5,
                             {{0, 1}, {0, 4}, {1, 4}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("single-edge insertion on the 5-vertex example") {
    DynamicEngine engine = DynamicEngine::from_graph(example_graph());
    CHECK(engine.index().sorted() == std::vector<Clique>{{0, 1, 4}, {1, 2, 3}});

    CliqueDelta d = engine.step({{4, 3}}, cfg_with(4));
    CHECK(sorted(d.new_cliques) == std::vector<Clique>{{1, 3, 4}});
    CHECK(d.subsumed.empty());
    CHECK(engine.index().sorted() ==
          std::vector<Clique>{{0, 1, 4}, {1, 2, 3}, {1, 3, 4}});
}

TEST_CASE("batch completing the example to K5 subsumes everything") {
    DynamicEngine engine = DynamicEngine::from_graph(
        apply_batch(example_graph(), EdgeBatch::normalize(example_graph(), {{4, 3}})));
    REQUIRE(engine.index().size() == 3);

    CliqueDelta d = engine.step({{0, 2}, {0, 3}, {2, 4}}, cfg_with(4));
    CHECK(sorted(d.new_cliques) == std::vector<Clique>{{0, 1, 2, 3, 4}});
    CHECK(sorted(d.subsumed) ==
          std::vector<Clique>{{0, 1, 4}, {1, 2, 3}, {1, 3, 4}});
    CHECK(engine.index().sorted() == std::vector<Clique>{{0, 1, 2, 3, 4}});
}

TEST_CASE("completing a near-clique changes exactly three cliques") {
    for (std::size_t n : {4u, 10u, 30u}) {
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (!(u == 0 && v == 1)) edges.push_back({u, v});
        DynamicEngine engine = DynamicEngine::from_graph(Graph::from_edges(n, edges));
        REQUIRE(engine.index().size() == 2);

        CliqueDelta d = engine.step({{0, 1}}, cfg_with(4));
        CHECK(d.new_cliques.size() == 1);
        CHECK(d.subsumed.size() == 2);
        CHECK(d.new_cliques.front().size() == n);
        CHECK(engine.index().size() == 1);
    }
}

TEST_CASE("new-clique attribution: each clique emitted by its first edge") {
    // after {(e,d)}, inserting (a,c),(a,d),(c,e) in that order: the K5 is
    // attributed to the first edge; later edges find it excluded and emit
    // nothing
    Graph g = apply_batch(example_graph(),
                          EdgeBatch::normalize(example_graph(), {{4, 3}}));
    EdgeBatch h = EdgeBatch::normalize(g, {{0, 2}, {0, 3}, {2, 4}});
    Graph g2 = apply_batch(g, h);
    auto fresh = par_imce_new(g2, h, cfg_with(4));
    CHECK(sorted(fresh) == std::vector<Clique>{{0, 1, 2, 3, 4}});
}

TEST_CASE("edge with empty common neighborhood emits itself") {
    Graph g(4);
    EdgeBatch h = EdgeBatch::normalize(g, {{0, 1}, {2, 3}});
    auto fresh = par_imce_new(apply_batch(g, h), h, cfg_with(2));
    CHECK(sorted(fresh) == std::vector<Clique>{{0, 1}, {2, 3}});
}

TEST_CASE("subsumption candidate generation") {
    // K5 formed from the example: stripping one endpoint of each contained
    // batch edge from the new clique must rediscover all three old cliques
    Graph g = apply_batch(example_graph(),
                          EdgeBatch::normalize(example_graph(), {{4, 3}}));
    EdgeBatch h = EdgeBatch::normalize(g, {{0, 2}, {0, 3}, {2, 4}});
    CliqueIndex index({{0, 1, 4}, {1, 2, 3}, {1, 3, 4}});
    auto del = par_imce_sub(h, index, {{0, 1, 2, 3, 4}}, cfg_with(4));
    CHECK(sorted(del) == std::vector<Clique>{{0, 1, 4}, {1, 2, 3}, {1, 3, 4}});
    CHECK(index.size() == 0);

    // a new clique disjoint from the index subsumes nothing
    CliqueIndex other({{5, 6}});
    auto none = par_imce_sub(h, other, {{0, 1, 2, 3, 4}}, cfg_with(2));
    CHECK(none.empty());
    CHECK(other.size() == 1);
}

TEST_CASE("empty and fully-filtered batches are no-ops") {
    DynamicEngine engine = DynamicEngine::from_graph(testutil::complete(4));
    CliqueDelta d = engine.step({}, cfg_with(2));
    CHECK(d.new_cliques.empty());
    CHECK(d.subsumed.empty());
    d = engine.step({{0, 1}, {2, 2}}, cfg_with(2));  // present + loop
    CHECK(d.new_cliques.empty());
    CHECK(d.subsumed.empty());
    CHECK(engine.index().size() == 1);
}

TEST_CASE("index tracks the true clique set across random streams") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t n = 8 + rng() % 18;
        Graph full = testutil::random_gnp(n, 0.5, rng);
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : full.neighbors(u))
                if (u < v) edges.push_back({u, v});
        std::shuffle(edges.begin(), edges.end(), rng);

        DynamicEngine engine = DynamicEngine::from_graph(Graph(n));
        std::size_t batch = 1 + rng() % 7;
        for (std::size_t off = 0; off < edges.size(); off += batch) {
            std::vector<Edge> slice(edges.begin() + off,
                                    edges.begin() + std::min(edges.size(), off + batch));
            std::size_t before = engine.index().size();
            CliqueDelta d = engine.step(slice, cfg_with(4));
            // conservation identity
            CHECK(engine.index().size() ==
                  before + d.new_cliques.size() - d.subsumed.size());
            CHECK(engine.index().sorted() == oracle_enumerate(engine.graph()));
        }
    }
}

TEST_CASE("serial and parallel steps produce the same delta") {
    std::mt19937 rng(59);
    Graph full = testutil::random_gnp(20, 0.4, rng);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < full.vertex_count(); ++u)
        for (VertexId v : full.neighbors(u))
            if (u < v) edges.push_back({u, v});
    std::shuffle(edges.begin(), edges.end(), rng);

    DynamicEngine par_engine = DynamicEngine::from_graph(Graph(20));
    DynamicEngine seq_engine = par_engine;
    for (std::size_t off = 0; off < edges.size(); off += 9) {
        std::vector<Edge> slice(edges.begin() + off,
                                edges.begin() + std::min(edges.size(), off + 9));
        CliqueDelta a = par_engine.step(slice, cfg_with(4));
        CliqueDelta b = seq_engine.seq_step(slice);
        CHECK(sorted(a.new_cliques) == sorted(b.new_cliques));
        CHECK(sorted(a.subsumed) == sorted(b.subsumed));
    }
    CHECK(par_engine.index().sorted() == seq_engine.index().sorted());
}

TEST_CASE("the final state is batch-split insensitive") {
    std::mt19937 rng(61);
    Graph full = testutil::random_gnp(16, 0.5, rng);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < full.vertex_count(); ++u)
        for (VertexId v : full.neighbors(u))
            if (u < v) edges.push_back({u, v});

    std::vector<Clique> reference;
    for (std::size_t batch : {1u, 7u, 1000u}) {
        DynamicEngine engine = DynamicEngine::from_graph(Graph(16));
        for (std::size_t off = 0; off < edges.size(); off += batch) {
            std::vector<Edge> slice(edges.begin() + off,
                                    edges.begin() + std::min(edges.size(), off + batch));
            engine.step(slice, cfg_with(4));
        }
        if (reference.empty()) reference = engine.index().sorted();
        CHECK(engine.index().sorted() == reference);
    }
    CHECK(reference == oracle_enumerate(full));
}

TEST_CASE("count-only steps report new cliques without maintaining the index") {
    DynamicEngine engine = DynamicEngine::from_graph(example_graph());
    auto fresh = engine.step_count_only({{4, 3}}, cfg_with(2));
    CHECK(sorted(fresh) == std::vector<Clique>{{1, 3, 4}});
    CHECK(engine.graph().has_edge(4, 3));  // graph advanced
}
