#pragma once

#include <string>
#include <vector>

namespace mce::cli {

struct EnumerateOptions {
    std::string input;
    std::string algo = "parmce";      // ttt | parttt | parmce
    std::string ranking = "degree";   // degree | degeneracy | triangle
    std::size_t threads = 0;          // 0 = hardware default
    std::string output = "count";     // count | list | stats
    std::size_t grain = 16;
};

struct StreamOptions {
    std::string input;
    std::size_t batch_size = 1000;
    std::size_t threads = 0;
    std::string report = "counts";    // counts | deltas
    std::string mode = "maintain";    // maintain | count-only
    bool baseline = false;
};

struct BenchOptions {
    std::string input;
    std::vector<std::size_t> threads_list{1, 2, 4, 8};
    std::vector<std::string> algo_list{"ttt", "parttt", "parmce"};
    std::vector<std::string> ranking_list{"degree"};
    std::size_t repeats = 1;
};

// Each returns the process exit status: 0 ok, 1 usage error, 2 I/O error.
int cmd_enumerate(const EnumerateOptions& opt);
int cmd_stream(const StreamOptions& opt);
int cmd_bench(const BenchOptions& opt);

}  // namespace mce::cli
