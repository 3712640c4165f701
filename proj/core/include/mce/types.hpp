#pragma once

#include <cstdint>
#include <vector>

namespace mce {

// Dense vertex index, 0..n-1, assigned at load time. Original external
// labels live in Graph's label map.
using VertexId = std::uint32_t;

// External vertex label as it appears in an edge-list file.
using VertexLabel = std::int64_t;

// A clique in canonical form: vertex ids in ascending order.
using Clique = std::vector<VertexId>;

struct CliqueHash {
    std::size_t operator()(const Clique& c) const noexcept {
        // FNV-1a over the id sequence
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : c) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace mce
