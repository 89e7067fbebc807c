#include "mf/signed_graph.hpp"

#include <queue>

namespace mf {

SignedGraph switched(const SignedGraph& sg, const VertexSet& w) {
    sg.base.check_vertex_set(w);
    return SignedGraph(sg.base, set_symmetric_difference(sg.negative, boundary(sg.base, w)));
}

std::optional<VertexSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (!a.base.same_structure(b.base))
        throw std::invalid_argument("switching_equivalent: base graphs differ");
    const Multigraph& g = a.base;
    EdgeSet target = set_symmetric_difference(a.negative, b.negative);

    // 2-colour so that an edge crosses iff it lies in `target`.
    std::vector<int> side(g.vertex_count(), -1);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;  // lowest-id vertex of the component stays outside W
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& arc : g.adj(v)) {
                int want = side[v] ^ (set_contains(target, arc.edge) ? 1 : 0);
                if (side[arc.to] < 0) {
                    side[arc.to] = want;
                    q.push(arc.to);
                } else if (side[arc.to] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet w;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == 1) w.push_back(v);
    return w;
}

std::optional<VertexSet> monochrome_split(const Multigraph& g, const EdgeSet& a) {
    return switching_equivalent(SignedGraph(g, a), SignedGraph(g, g.all_edges()));
}

std::pair<Partition, PartitionCorrespondence> cut_from_bipartite_pair(const Multigraph& g,
                                                                      const EdgeSet& a,
                                                                      const EdgeSet& b) {
    g.check_edge_set(a);
    g.check_edge_set(b);
    if (!bipartition(delete_edges(g, a).graph))
        throw std::invalid_argument("cut_from_bipartite_pair: g - A is not bipartite");
    if (!bipartition(delete_edges(g, b).graph))
        throw std::invalid_argument("cut_from_bipartite_pair: g - B is not bipartite");

    auto complement = [&g](const VertexSet& s) {
        VertexSet out;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!set_contains(s, v)) out.push_back(v);
        return out;
    };

    PartitionCorrespondence corr;
    std::optional<VertexSet> wa = monochrome_split(g, normalized_set(a));
    std::optional<VertexSet> wb = monochrome_split(g, normalized_set(b));
    VertexSet v1;
    if (wa && wb) {
        corr.proof_route = true;
        corr.v1a = *wa;
        corr.v1b = *wb;
        v1 = set_symmetric_difference(*wa, *wb);
    } else {
        // The removed sets cannot all be tucked inside partition sides, but
        // the two signatures may still be directly equivalent.
        auto w = switching_equivalent(SignedGraph(g, normalized_set(a)),
                                      SignedGraph(g, normalized_set(b)));
        if (!w)
            throw std::invalid_argument(
                "cut_from_bipartite_pair: A delta B is not an edge cut");
        v1 = *w;
        auto plain = bipartition(delete_edges(g, a).graph);
        corr.v1a = plain->side1;
        corr.v1b = set_symmetric_difference(corr.v1a, v1);
    }
    corr.v2a = complement(corr.v1a);
    corr.v2b = complement(corr.v1b);

    Partition part{v1, complement(v1)};
    if (boundary(g, part.side1) != normalized_set(set_symmetric_difference(
                                       normalized_set(a), normalized_set(b))))
        throw std::logic_error("cut_from_bipartite_pair: boundary mismatch");
    return {part, corr};
}

}  // namespace mf
