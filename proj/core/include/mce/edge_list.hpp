#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <string>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

struct ParseError : std::runtime_error {
    explicit ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// One raw record of a (possibly timestamped) edge-list file.
struct TemporalEdge {
    VertexLabel u;
    VertexLabel v;
    std::optional<std::int64_t> timestamp;  // third column, when present
    std::size_t file_order;                 // 0-based position among data lines
};

// Lines are whitespace-separated "u v [timestamp] [...]"; '#' and '%' start
// comments. Throws ParseError when one of the first two columns is not an
// integer.
std::vector<TemporalEdge> read_edge_records(std::istream& in);

// Maps external labels to dense ids in order of first appearance. The
// resulting graph is simple: self-loops dropped, duplicate/reverse edges
// collapsed, extra columns ignored.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Streaming view used by the dynamic driver: label->id map over all records
// plus the records themselves (timestamps retained).
struct EdgeStream {
    std::vector<TemporalEdge> records;
    std::vector<VertexLabel> labels;             // dense id -> label
    std::unordered_map<VertexLabel, VertexId> ids;  // label -> dense id
    std::size_t vertex_count() const { return labels.size(); }
    VertexId id_of(VertexLabel label) const;
    bool has_timestamps() const;
};

EdgeStream load_edge_stream(std::istream& in);
EdgeStream load_edge_stream_file(const std::string& path);

// Dense (u, v) pair for a record, via the stream's label map.
Edge dense_edge(const EdgeStream& s, const TemporalEdge& r);

}  // namespace mce
