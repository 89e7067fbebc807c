#include "mf/matching.hpp"

#include <queue>

namespace mf {

bool is_valid_matching(const Multigraph& g, const Matching& m) {
    std::vector<char> hit(g.vertex_count(), 0);
    for (int e : m.edges) {
        auto [u, v] = g.endpoints(e);
        if (hit[u] || hit[v]) return false;
        hit[u] = hit[v] = 1;
    }
    return true;
}

bool is_perfect_matching(const Multigraph& g, const Matching& m) {
    return is_valid_matching(g, m) && 2 * m.size() == g.vertex_count();
}

namespace {

struct BlossomSolver {
    const Multigraph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSolver(const Multigraph& graph)
        : g(graph),
          n(graph.vertex_count()),
          match(n, -1),
          parent(n, -1),
          base(n),
          used(n, 0),
          in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        int cur = a;
        while (true) {
            cur = base[cur];
            mark[cur] = 1;
            if (match[cur] == -1) break;
            cur = parent[match[cur]];
        }
        cur = b;
        while (true) {
            cur = base[cur];
            if (mark[cur]) return cur;
            cur = parent[match[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& arc : g.adj(v)) {
                int to = arc.to;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    std::vector<int> solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
        return match;
    }
};

}  // namespace

std::vector<int> maximum_matching_mates(const Multigraph& g) {
    return BlossomSolver(g).solve();
}

Matching maximum_matching(const Multigraph& g) {
    std::vector<int> mate = maximum_matching_mates(g);
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.edges.push_back(*g.edge_between(v, mate[v]));
    m.edges = normalized_set(std::move(m.edges));
    return m;
}

std::optional<Matching> perfect_matching_avoiding(const Multigraph& g, const EdgeSet& x) {
    g.check_edge_set(x);
    EdgeDeletion d = delete_edges(g, x);
    Matching inner = maximum_matching(d.graph);
    if (!is_perfect_matching(d.graph, inner)) return std::nullopt;
    return Matching{d.to_old(inner.edges)};
}

GEDecomposition gallai_edmonds(const Multigraph& g) {
    int n = g.vertex_count();
    Matching best = maximum_matching(g);
    GEDecomposition ge;
    std::vector<char> in_d(n, 0);
    for (int v = 0; v < n; ++v) {
        VertexDeletion del = delete_vertices(g, {v});
        if (maximum_matching(del.graph).size() == best.size()) {
            ge.D.push_back(v);
            in_d[v] = 1;
        }
    }
    std::vector<char> in_a(n, 0);
    for (int v : ge.D)
        for (const auto& arc : g.adj(v))
            if (!in_d[arc.to]) in_a[arc.to] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        if (in_a[v]) ge.A.push_back(v);
        else ge.C.push_back(v);
    }
    return ge;
}

namespace {

int deficiency_of(const Multigraph& g, const VertexSet& s) {
    VertexDeletion del = delete_vertices(g, s);
    int oc = 0;
    for (const auto& comp : components(del.graph))
        if (comp.size() % 2 == 1) ++oc;
    return oc - static_cast<int>(s.size());
}

}  // namespace

bool barrier_is_consistent(const Multigraph& g, const Barrier& b) {
    VertexDeletion del = delete_vertices(g, b.S);
    std::vector<VertexSet> odd;
    for (const auto& comp : components(del.graph)) {
        if (comp.size() % 2 == 0) continue;
        VertexSet orig;
        for (int v : comp) orig.push_back(del.old_of_new[v]);
        odd.push_back(normalized_set(std::move(orig)));
    }
    return odd == b.odd_components &&
           b.deficiency == static_cast<int>(odd.size()) - static_cast<int>(b.S.size());
}

Barrier max_deficiency_barrier(const Multigraph& g) {
    VertexSet s = gallai_edmonds(g).A;
    int def = deficiency_of(g, s);

    // Absorb the neighbour of a leaf of a non-singleton component while the
    // deficiency stays put; this also grows |S|.
    bool progress = true;
    while (progress) {
        progress = false;
        VertexDeletion del = delete_vertices(g, s);
        for (const auto& comp : components(del.graph)) {
            if (comp.size() < 2) continue;
            for (int v : comp) {
                if (del.graph.degree(v) != 1) continue;
                int w = del.old_of_new[del.graph.adj(v)[0].to];
                VertexSet grown = set_union(s, {w});
                if (deficiency_of(g, grown) == def) {
                    s = std::move(grown);
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }

    Barrier b;
    b.S = s;
    VertexDeletion del = delete_vertices(g, s);
    for (const auto& comp : components(del.graph)) {
        if (comp.size() % 2 == 0) continue;
        VertexSet orig;
        for (int v : comp) orig.push_back(del.old_of_new[v]);
        b.odd_components.push_back(normalized_set(std::move(orig)));
    }
    b.deficiency = static_cast<int>(b.odd_components.size()) - static_cast<int>(b.S.size());
    return b;
}

}  // namespace mf
