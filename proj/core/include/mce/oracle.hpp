#pragma once

#include <vector>

#include "mce/graph.hpp"
#include "mce/types.hpp"

namespace mce {

inline constexpr std::size_t kOracleVertexLimit = 64;

// Independent correctness oracle: plain Bron-Kerbosch without pivoting, a
// structurally different recursion from the pivoted search. Every output is
// re-checked with verify_maximal. Returns C(G) sorted. Refuses graphs with
// more than `limit` vertices.
std::vector<Clique> oracle_enumerate(const Graph& g, std::size_t limit = kOracleVertexLimit);

}  // namespace mce
