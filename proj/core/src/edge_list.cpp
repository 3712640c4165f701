#include "mce/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace mce {

namespace {

bool parse_int(const std::string& tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

std::vector<TemporalEdge> read_edge_records(std::istream& in) {
    std::vector<TemporalEdge> records;
    std::string line;
    std::size_t lineno = 0;
    std::size_t order = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing comment and whitespace-only lines
        std::size_t cut = line.find_first_of("#%");
        if (cut != std::string::npos) line.resize(cut);
        std::istringstream ls(line);
        std::string tu, tv, tt;
        if (!(ls >> tu)) continue;  // blank or comment-only
        if (!(ls >> tv)) throw ParseError(lineno, "expected two integer columns");
        TemporalEdge rec;
        if (!parse_int(tu, rec.u)) throw ParseError(lineno, "non-integer token '" + tu + "'");
        if (!parse_int(tv, rec.v)) throw ParseError(lineno, "non-integer token '" + tv + "'");
        if (ls >> tt) {
            std::int64_t ts;
            if (parse_int(tt, ts)) rec.timestamp = ts;
        }
        rec.file_order = order++;
        records.push_back(rec);
    }
    return records;
}

EdgeStream load_edge_stream(std::istream& in) {
    EdgeStream s;
    s.records = read_edge_records(in);
    auto intern = [&](VertexLabel lab) {
        auto [it, fresh] = s.ids.emplace(lab, static_cast<VertexId>(s.labels.size()));
        if (fresh) s.labels.push_back(lab);
        return it->second;
    };
    for (const TemporalEdge& r : s.records) {
        intern(r.u);
        intern(r.v);
    }
    return s;
}

VertexId EdgeStream::id_of(VertexLabel label) const {
    auto it = ids.find(label);
    if (it == ids.end()) throw std::invalid_argument("unknown label");
    return it->second;
}

bool EdgeStream::has_timestamps() const {
    for (const TemporalEdge& r : records)
        if (!r.timestamp) return false;
    return !records.empty();
}

Edge dense_edge(const EdgeStream& s, const TemporalEdge& r) {
    return {s.id_of(r.u), s.id_of(r.v)};
}

Graph load_edge_list(std::istream& in) {
    EdgeStream s = load_edge_stream(in);
    Graph g(s.vertex_count());
    g.set_labels(s.labels);
    for (const TemporalEdge& r : s.records) {
        Edge e = dense_edge(s, r);
        g.add_edge(e.u, e.v);  // drops loops and duplicates
    }
    return g;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

EdgeStream load_edge_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_stream(in);
}

}  // namespace mce
