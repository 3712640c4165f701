#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"maximal clique enumeration over static and streaming graphs"};
    app.require_subcommand(1);

    mce::cli::EnumerateOptions eopt;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all maximal cliques");
    enumerate->add_option("input", eopt.input, "edge-list file")->required();
    enumerate->add_option("--algo", eopt.algo, "ttt | parttt | parmce")
        ->capture_default_str();
    enumerate->add_option("--ranking", eopt.ranking, "degree | degeneracy | triangle")
        ->capture_default_str();
    enumerate->add_option("--threads", eopt.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    enumerate->add_option("--output", eopt.output, "count | list | stats")
        ->capture_default_str();
    enumerate->add_option("--grain", eopt.grain, "sequential-fallback threshold")
        ->capture_default_str();

    mce::cli::StreamOptions sopt;
    auto* stream = app.add_subcommand(
        "stream", "replay an edge stream, maintaining the maximal clique set");
    stream->add_option("input", sopt.input, "edge-list file, optional timestamp column")
        ->required();
    stream->add_option("--batch-size", sopt.batch_size, "edges per batch")
        ->capture_default_str();
    stream->add_option("--threads", sopt.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    stream->add_option("--report", sopt.report, "counts | deltas")
        ->capture_default_str();
    stream->add_option("--mode", sopt.mode, "maintain | count-only")
        ->capture_default_str();
    stream->add_flag("--baseline", sopt.baseline,
                     "also run each batch serially and report the speedup");

    mce::cli::BenchOptions bopt;
    auto* bench = app.add_subcommand("bench", "timing sweep across algorithms/threads");
    bench->add_option("input", bopt.input, "edge-list file")->required();
    bench->add_option("--threads", bopt.threads_list, "thread counts to sweep")
        ->capture_default_str();
    bench->add_option("--algos", bopt.algo_list, "algorithms to sweep")
        ->capture_default_str();
    bench->add_option("--rankings", bopt.ranking_list, "rankings to sweep (parmce)")
        ->capture_default_str();
    bench->add_option("--repeats", bopt.repeats, "repetitions per configuration")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (enumerate->parsed()) return mce::cli::cmd_enumerate(eopt);
    if (stream->parsed()) return mce::cli::cmd_stream(sopt);
    return mce::cli::cmd_bench(bopt);
}
