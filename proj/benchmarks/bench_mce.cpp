#include <benchmark/benchmark.h>

#include <random>

#include "mce/dynamic.hpp"
#include "mce/parallel.hpp"

using namespace mce;

namespace {

Graph random_gnp(std::size_t n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph moon_moser(std::size_t k) {
    std::size_t n = 3 * k;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (u / 3 != v / 3) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

ParallelConfig cfg_with(std::size_t threads) {
    ParallelConfig cfg;
    cfg.thread_count = threads;
    return cfg;
}

const Graph& bench_graph() {
    static Graph g = random_gnp(800, 0.12, 99);
    return g;
}

void BM_ttt(benchmark::State& state) {
    const Graph& g = bench_graph();
    for (auto _ : state) {
        CountingSink sink;
        ttt(g, SearchState::initial(g), sink);
        benchmark::DoNotOptimize(sink.count());
    }
}
BENCHMARK(BM_ttt)->Unit(benchmark::kMillisecond);

void BM_par_ttt(benchmark::State& state) {
    const Graph& g = bench_graph();
    for (auto _ : state) {
        CountingSink sink;
        par_ttt(g, SearchState::initial(g), sink, cfg_with(state.range(0)));
        benchmark::DoNotOptimize(sink.count());
    }
}
BENCHMARK(BM_par_ttt)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_par_mce(benchmark::State& state) {
    const Graph& g = bench_graph();
    RankAssignment rank = degree_ranking(g);
    for (auto _ : state) {
        CountingSink sink;
        par_mce(g, rank, sink, cfg_with(state.range(0)));
        benchmark::DoNotOptimize(sink.count());
    }
}
BENCHMARK(BM_par_mce)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_pivot(benchmark::State& state) {
    const Graph& g = bench_graph();
    std::vector<VertexId> cand;
    for (VertexId v = 0; v < g.vertex_count(); ++v) cand.push_back(v);
    for (auto _ : state) benchmark::DoNotOptimize(par_pivot(g, cand, {}));
}
BENCHMARK(BM_pivot);

void BM_rankings(benchmark::State& state) {
    const Graph& g = bench_graph();
    auto kind = static_cast<RankingKind>(state.range(0));
    for (auto _ : state) {
        RankAssignment r = compute_ranking(g, kind);
        benchmark::DoNotOptimize(r.metric.data());
    }
}
BENCHMARK(BM_rankings)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_moon_moser_par_mce(benchmark::State& state) {
    Graph g = moon_moser(state.range(0));
    RankAssignment rank = degree_ranking(g);
    for (auto _ : state) {
        CountingSink sink;
        par_mce(g, rank, sink, cfg_with(4));
        benchmark::DoNotOptimize(sink.count());
    }
}
BENCHMARK(BM_moon_moser_par_mce)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_imce_step(benchmark::State& state) {
    Graph full = random_gnp(300, 0.3, 17);
    std::vector<Edge> all;
    for (VertexId u = 0; u < full.vertex_count(); ++u)
        for (VertexId v : full.neighbors(u))
            if (u < v) all.push_back({u, v});
    std::mt19937 rng(5);
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t removed = 300;
    std::vector<Edge> batch(all.begin(), all.begin() + removed);
    DynamicEngine seed = DynamicEngine::from_graph(Graph::from_edges(
        full.vertex_count(), {all.begin() + removed, all.end()}));
    for (auto _ : state) {
        DynamicEngine engine = seed;
        CliqueDelta d = engine.step(batch, cfg_with(state.range(0)));
        benchmark::DoNotOptimize(d.new_cliques.size());
    }
}
BENCHMARK(BM_imce_step)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
