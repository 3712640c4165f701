#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>

#include "mce/dynamic.hpp"
#include "mce/edge_list.hpp"
#include "mce/oracle.hpp"
#include "mce/parallel.hpp"
#include "mce/ranking.hpp"
#include "mce/search.hpp"

namespace mce::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

ParallelConfig make_config(std::size_t threads, std::size_t grain = 16) {
    ParallelConfig cfg;
    if (threads > 0) cfg.thread_count = threads;
    cfg.grain_threshold = grain;
    return cfg;
}

bool parse_ranking(const std::string& name, RankingKind& out) {
    if (name == "degree") out = RankingKind::Degree;
    else if (name == "degeneracy") out = RankingKind::Degeneracy;
    else if (name == "triangle") out = RankingKind::Triangle;
    else return false;
    return true;
}

// clique with dense ids -> original labels, ascending
std::vector<VertexLabel> to_labels(const Graph& g, const Clique& c) {
    std::vector<VertexLabel> out;
    out.reserve(c.size());
    for (VertexId v : c) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

void print_label_clique(const std::vector<VertexLabel>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        std::printf("%s%lld", i ? " " : "", static_cast<long long>(c[i]));
    std::printf("\n");
}

struct EnumerationRun {
    std::int64_t ranking_ms = 0;
    std::int64_t enum_ms = 0;
    std::uint64_t cliques = 0;
};

int run_algorithm(const Graph& g, const std::string& algo, RankingKind ranking,
                  const ParallelConfig& cfg, CliqueSink& sink, EnumerationRun& run,
                  std::vector<std::uint64_t>* subproblem_counts = nullptr) {
    if (algo == "ttt") {
        auto t0 = Clock::now();
        ttt(g, SearchState::initial(g), sink);
        run.enum_ms = elapsed_ms(t0);
    } else if (algo == "parttt") {
        auto t0 = Clock::now();
        par_ttt(g, SearchState::initial(g), sink, cfg);
        run.enum_ms = elapsed_ms(t0);
    } else if (algo == "parmce") {
        auto t0 = Clock::now();
        RankAssignment rank = compute_ranking(g, ranking);
        run.ranking_ms = elapsed_ms(t0);
        t0 = Clock::now();
        par_mce(g, rank, sink, cfg, subproblem_counts);
        run.enum_ms = elapsed_ms(t0);
    } else {
        std::cerr << "unknown algorithm '" << algo << "'\n";
        return 1;
    }
    return 0;
}

}  // namespace

int cmd_enumerate(const EnumerateOptions& opt) {
    RankingKind ranking;
    if (!parse_ranking(opt.ranking, ranking)) {
        std::cerr << "unknown ranking '" << opt.ranking << "'\n";
        return 1;
    }
    if (opt.output != "count" && opt.output != "list" && opt.output != "stats") {
        std::cerr << "unknown output mode '" << opt.output << "'\n";
        return 1;
    }

    Graph g;
    try {
        g = load_edge_list_file(opt.input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    ParallelConfig cfg = make_config(opt.threads, opt.grain);
    EnumerationRun run;

    if (opt.output == "list") {
        CollectingSink sink;
        if (int rc = run_algorithm(g, opt.algo, ranking, cfg, sink, run)) return rc;
        std::vector<std::vector<VertexLabel>> lines;
        for (const Clique& c : sink.sorted()) lines.push_back(to_labels(g, c));
        std::sort(lines.begin(), lines.end());
        for (const auto& line : lines) print_label_clique(line);
    } else if (opt.output == "count") {
        CountingSink sink;
        if (int rc = run_algorithm(g, opt.algo, ranking, cfg, sink, run)) return rc;
        std::printf("%llu\n", static_cast<unsigned long long>(sink.count()));
    } else {
        StatsSink sink;
        if (int rc = run_algorithm(g, opt.algo, ranking, cfg, sink, run)) return rc;
        for (const auto& [size, freq] : sink.histogram())
            std::printf("%zu\t%llu\n", size, static_cast<unsigned long long>(freq));
        std::size_t max_deg = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            max_deg = std::max(max_deg, g.degree(v));
        std::printf("max_clique_size\t%zu\n", sink.max_clique_size());
        std::printf("max_degree\t%zu\n", max_deg);
        std::printf("clique_count\t%llu\n", static_cast<unsigned long long>(sink.count()));
    }
    return 0;
}

int cmd_stream(const StreamOptions& opt) {
    if (opt.report != "counts" && opt.report != "deltas") {
        std::cerr << "unknown report mode '" << opt.report << "'\n";
        return 1;
    }
    if (opt.mode != "maintain" && opt.mode != "count-only") {
        std::cerr << "unknown mode '" << opt.mode << "'\n";
        return 1;
    }
    if (opt.batch_size == 0) {
        std::cerr << "batch size must be positive\n";
        return 1;
    }

    EdgeStream stream;
    try {
        stream = load_edge_stream_file(opt.input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::vector<TemporalEdge> records = stream.records;
    if (stream.has_timestamps()) {
        std::stable_sort(records.begin(), records.end(),
                         [](const TemporalEdge& a, const TemporalEdge& b) {
                             return *a.timestamp < *b.timestamp;
                         });
    } else {
        std::cerr << "warning: no timestamp column; replaying in file order\n";
    }

    Graph start(stream.vertex_count());
    start.set_labels(stream.labels);
    // a vertex enters the maintained clique set with its first edge; the
    // edgeless start graph contributes no indexed singletons
    DynamicEngine engine(start, {});
    DynamicEngine serial_engine = engine;

    ParallelConfig cfg = make_config(opt.threads);
    const Graph& labels = engine.graph();

    std::size_t batch_id = 0;
    for (std::size_t off = 0; off < records.size(); off += opt.batch_size) {
        ++batch_id;
        std::size_t end = std::min(records.size(), off + opt.batch_size);
        std::vector<Edge> batch;
        batch.reserve(end - off);
        for (std::size_t i = off; i < end; ++i)
            batch.push_back(dense_edge(stream, records[i]));

        if (opt.mode == "count-only") {
            auto t0 = Clock::now();
            auto fresh = engine.step_count_only(batch, cfg);
            std::printf("%zu,%zu,-,%lld\n", batch_id, fresh.size(),
                        static_cast<long long>(elapsed_ms(t0)));
            if (opt.report == "deltas")
                for (const Clique& c : fresh) {
                    std::printf("+ ");
                    print_label_clique(to_labels(labels, c));
                }
            continue;
        }

        auto t0 = Clock::now();
        CliqueDelta delta = engine.step(batch, cfg);
        std::int64_t wall = elapsed_ms(t0);

        if (opt.baseline) {
            auto t1 = Clock::now();
            serial_engine.seq_step(batch);
            std::int64_t serial = elapsed_ms(t1);
            double speedup = wall > 0 ? static_cast<double>(serial) / wall : 0.0;
            std::printf("%zu,%zu,%zu,%lld,%lld,%.2f\n", batch_id,
                        delta.new_cliques.size(), delta.subsumed.size(),
                        static_cast<long long>(wall), static_cast<long long>(serial),
                        speedup);
        } else {
            std::printf("%zu,%zu,%zu,%lld\n", batch_id, delta.new_cliques.size(),
                        delta.subsumed.size(), static_cast<long long>(wall));
        }
        if (opt.report == "deltas") {
            for (const Clique& c : delta.new_cliques) {
                std::printf("+ ");
                print_label_clique(to_labels(labels, c));
            }
            for (const Clique& c : delta.subsumed) {
                std::printf("- ");
                print_label_clique(to_labels(labels, c));
            }
        }
    }

    if (opt.mode == "maintain")
        std::printf("%zu\n", engine.index().size());
    return 0;
}

int cmd_bench(const BenchOptions& opt) {
    Graph g;
    try {
        g = load_edge_list_file(opt.input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    for (const auto& r : opt.ranking_list) {
        RankingKind k;
        if (!parse_ranking(r, k)) {
            std::cerr << "unknown ranking '" << r << "'\n";
            return 1;
        }
    }

    std::printf("algo,ranking,threads,RT_ms,ET_ms,TR_ms,cliques,speedup_vs_ttt\n");

    // sequential baseline first; all speedups are against its median TR
    struct BaselineRow {
        EnumerationRun run;
        std::uint64_t cliques;
    };
    std::vector<BaselineRow> baseline;
    std::vector<std::int64_t> ttt_tr;
    for (std::size_t rep = 0; rep < opt.repeats; ++rep) {
        CountingSink sink;
        EnumerationRun run;
        run_algorithm(g, "ttt", RankingKind::Degree, make_config(1), sink, run);
        ttt_tr.push_back(run.ranking_ms + run.enum_ms);
        baseline.push_back({run, sink.count()});
    }
    std::sort(ttt_tr.begin(), ttt_tr.end());
    double base_tr = static_cast<double>(ttt_tr[ttt_tr.size() / 2]);
    for (const auto& row : baseline) {
        std::int64_t tr = row.run.ranking_ms + row.run.enum_ms;
        std::printf("ttt,none,1,%lld,%lld,%lld,%llu,%.2f\n",
                    static_cast<long long>(row.run.ranking_ms),
                    static_cast<long long>(row.run.enum_ms),
                    static_cast<long long>(tr),
                    static_cast<unsigned long long>(row.cliques),
                    tr > 0 ? base_tr / tr : 0.0);
    }

    for (const std::string& algo : opt.algo_list) {
        if (algo == "ttt") continue;  // already reported
        for (const std::string& rname : opt.ranking_list) {
            RankingKind ranking;
            parse_ranking(rname, ranking);
            bool uses_ranking = algo == "parmce";
            for (std::size_t threads : opt.threads_list) {
                for (std::size_t rep = 0; rep < opt.repeats; ++rep) {
                    CountingSink sink;
                    EnumerationRun run;
                    if (int rc = run_algorithm(g, algo, ranking, make_config(threads),
                                               sink, run))
                        return rc;
                    std::int64_t tr = run.ranking_ms + run.enum_ms;
                    std::printf("%s,%s,%zu,%lld,%lld,%lld,%llu,%.2f\n", algo.c_str(),
                                uses_ranking ? rname.c_str() : "none", threads,
                                static_cast<long long>(run.ranking_ms),
                                static_cast<long long>(run.enum_ms),
                                static_cast<long long>(tr),
                                static_cast<unsigned long long>(sink.count()),
                                tr > 0 ? base_tr / tr : 0.0);
                }
            }
            if (!uses_ranking) break;  // ranking list is irrelevant for parttt
        }
    }

    // subproblem imbalance report (per-vertex emission shares under parmce)
    {
        CountingSink sink;
        EnumerationRun run;
        std::vector<std::uint64_t> counts;
        RankingKind ranking;
        parse_ranking(opt.ranking_list.front(), ranking);
        run_algorithm(g, "parmce", ranking, make_config(opt.threads_list.front()),
                      sink, run, &counts);
        std::uint64_t total = std::accumulate(counts.begin(), counts.end(),
                                              std::uint64_t{0});
        std::sort(counts.rbegin(), counts.rend());
        std::printf("\nimbalance,subproblems,%zu\n", counts.size());
        std::printf("imbalance,cliques,%llu\n", static_cast<unsigned long long>(total));
        if (total > 0 && !counts.empty()) {
            std::printf("imbalance,top_share,%.6f\n",
                        static_cast<double>(counts.front()) / total);
            std::uint64_t acc = 0;
            std::size_t used = 0;
            for (std::uint64_t c : counts) {
                acc += c;
                ++used;
                if (acc * 10 >= total * 9) break;
            }
            std::printf("imbalance,frac_subproblems_for_90pct,%.6f\n",
                        static_cast<double>(used) / counts.size());
            for (std::size_t i = 0; i < std::min<std::size_t>(counts.size(), 20); ++i)
                std::printf("imbalance_share,%zu,%.6f\n", i + 1,
                            static_cast<double>(counts[i]) / total);
        }
    }
    return 0;
}

}  // namespace mce::cli
