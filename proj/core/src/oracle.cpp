#include "mce/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "mce/search.hpp"

namespace mce {

namespace {

void bk(const Graph& g, Clique& k, std::vector<VertexId> cand,
        std::vector<VertexId> fini, std::vector<Clique>& out) {
    if (cand.empty() && fini.empty()) {
        if (!k.empty()) {
            if (!verify_maximal(g, k))
                throw std::logic_error("oracle produced a non-maximal clique");
            out.push_back(k);
        }
        return;
    }
    while (!cand.empty()) {
        VertexId q = cand.front();
        auto cand_q = detail::intersect_neighbors(g, q, cand);
        auto fini_q = detail::intersect_neighbors(g, q, fini);
        detail::sorted_insert(k, q);
        bk(g, k, std::move(cand_q), std::move(fini_q), out);
        detail::sorted_erase(k, q);
        cand.erase(cand.begin());
        detail::sorted_insert(fini, q);
    }
}

}  // namespace

std::vector<Clique> oracle_enumerate(const Graph& g, std::size_t limit) {
    if (g.vertex_count() > limit)
        throw std::invalid_argument("oracle_enumerate: graph exceeds oracle limit");
    std::vector<Clique> out;
    Clique k;
    std::vector<VertexId> cand(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) cand[v] = v;
    bk(g, k, std::move(cand), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mce
