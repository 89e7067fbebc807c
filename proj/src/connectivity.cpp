#include "mf/connectivity.hpp"

#include <cstdint>
#include <queue>
#include <set>

namespace mf {

namespace {

struct Dinic {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> head;
    std::vector<int> level, iter;

    explicit Dinic(int n) : head(n), level(n), iter(n) {}

    void add_undirected(int u, int v) {
        head[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, 1});
        head[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : head[v]) {
                const Arc& a = arcs[id];
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(head[v].size()); ++i) {
            int id = head[v][i];
            Arc& a = arcs[id];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (int f = dfs(s, t, 1 << 30)) flow += f;
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) {
        std::vector<char> seen(head.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : head[v]) {
                const Arc& a = arcs[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }
};

}  // namespace

int min_cut_between(const Multigraph& g, const std::vector<int>& label,
                    std::vector<char>* source_side) {
    int n = g.vertex_count();
    // Supernodes: 0 = contracted sources, 1 = contracted sinks, 2.. = free.
    std::vector<int> node(n);
    int next = 2;
    for (int v = 0; v < n; ++v)
        node[v] = label[v] == 1 ? 0 : label[v] == 2 ? 1 : next++;
    Dinic din(next);
    for (auto [u, v] : g.edge_pairs())
        if (node[u] != node[v]) din.add_undirected(node[u], node[v]);
    int flow = din.max_flow(0, 1);
    if (source_side) {
        std::vector<char> reach = din.residual_reachable(0);
        source_side->assign(n, 0);
        for (int v = 0; v < n; ++v) (*source_side)[v] = reach[node[v]];
    }
    return flow;
}

int edge_connectivity(const Multigraph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge_connectivity needs at least 2 vertices");
    int best = g.edge_count() + 1;
    for (int t = 1; t < n; ++t) {
        std::vector<int> label(n, 0);
        label[0] = 1;
        label[t] = 2;
        best = std::min(best, min_cut_between(g, label, nullptr));
    }
    return best;
}

namespace {

// Shortest cycle through edge e, as its vertex list, or empty when e lies on
// no cycle. Edges in `mask` (if given) are unusable.
std::vector<int> shortest_cycle_through_edge(const Multigraph& g, int e,
                                             const std::vector<char>* vertex_removed) {
    auto [s, t] = g.endpoints(e);
    std::vector<int> parent_edge(g.vertex_count(), -1), parent(g.vertex_count(), -1);
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty() && dist[t] < 0) {
        int v = q.front();
        q.pop();
        for (const auto& a : g.adj(v)) {
            if (a.edge == e || dist[a.to] >= 0) continue;
            if (vertex_removed && (*vertex_removed)[a.to]) continue;
            dist[a.to] = dist[v] + 1;
            parent[a.to] = v;
            parent_edge[a.to] = a.edge;
            q.push(a.to);
        }
    }
    if (dist[t] < 0) return {};
    std::vector<int> cyc;
    for (int v = t; v != -1; v = parent[v]) cyc.push_back(v);
    return cyc;
}

bool has_cycle(const Multigraph& g, const std::vector<char>& removed) {
    // A component is acyclic iff it has one fewer edge than vertices.
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int r = 0; r < n; ++r) {
        if (removed[r] || comp[r] >= 0) continue;
        std::queue<int> q;
        comp[r] = nc;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : g.adj(v))
                if (!removed[a.to] && comp[a.to] < 0) {
                    comp[a.to] = nc;
                    q.push(a.to);
                }
        }
        ++nc;
    }
    std::vector<int> verts(nc, 0), edges(nc, 0);
    for (int v = 0; v < n; ++v)
        if (comp[v] >= 0) ++verts[comp[v]];
    for (auto [u, v] : g.edge_pairs())
        if (!removed[u] && !removed[v] && comp[u] == comp[v] && comp[u] >= 0) ++edges[comp[u]];
    for (int c = 0; c < nc; ++c)
        if (edges[c] >= verts[c]) return true;
    return false;
}

}  // namespace

std::optional<int> girth(const Multigraph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), tree_edge(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(tree_edge.begin(), tree_edge.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : g.adj(v))
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[v] + 1;
                    tree_edge[a.to] = a.edge;
                    q.push(a.to);
                }
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (dist[u] < 0 || dist[v] < 0) continue;
            if (tree_edge[u] == e || tree_edge[v] == e) continue;
            int len = dist[u] + dist[v] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_exception_graph(const Multigraph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n == 2 && m == 3) return true;  // K_2^3 (loops are impossible here)
    if (g.has_parallel_edges()) return false;
    if (n == 4 && m == 6) return true;  // simple => K_4
    if (n == 6 && m == 9 && g.is_cubic() && bipartition(g).has_value())
        return true;  // 3-regular bipartite on 3+3 => K_{3,3}
    return false;
}

namespace {

struct CandidateCycle {
    std::vector<int> vertices;  // sorted
};

void add_candidate(std::vector<CandidateCycle>& out, std::set<std::vector<int>>& seen,
                   std::vector<int> verts) {
    if (verts.empty()) return;
    std::sort(verts.begin(), verts.end());
    if (seen.insert(verts).second) out.push_back({std::move(verts)});
}

// A shortest cycle avoiding removed vertices, or empty.
std::vector<int> some_short_cycle(const Multigraph& g, const std::vector<char>& removed) {
    int bestlen = -1;
    std::vector<int> best;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (removed[u] || removed[v]) continue;
        std::vector<int> cyc = shortest_cycle_through_edge(g, e, &removed);
        if (cyc.empty()) continue;
        if (bestlen < 0 || static_cast<int>(cyc.size()) < bestlen) {
            bestlen = static_cast<int>(cyc.size());
            best = cyc;
        }
    }
    return best;
}

}  // namespace

CyclicConnectivityReport cyclic_edge_connectivity(const Multigraph& g) {
    CyclicConnectivityReport rep;
    int n = g.vertex_count();

    std::vector<CandidateCycle> cands;
    std::set<std::vector<int>> seen;
    for (int e = 0; e < g.edge_count(); ++e)
        add_candidate(cands, seen, shortest_cycle_through_edge(g, e, nullptr));
    // Partner cycles living outside each candidate.
    size_t primary = cands.size();
    for (size_t i = 0; i < primary; ++i) {
        std::vector<char> removed(n, 0);
        for (int v : cands[i].vertices) removed[v] = 1;
        add_candidate(cands, seen, some_short_cycle(g, removed));
    }

    auto consider = [&](int value, const VertexSet& w) {
        if (rep.value && *rep.value <= value) return;
        std::vector<char> in_w(n, 0), out_w(n, 0);
        for (int v = 0; v < n; ++v) out_w[v] = 1;
        for (int v : w) {
            in_w[v] = 1;
            out_w[v] = 0;
        }
        // The report only carries genuinely cycle-separating cuts.
        std::vector<char> removed_w(n, 0), removed_c(n, 0);
        for (int v = 0; v < n; ++v) {
            removed_w[v] = !in_w[v];
            removed_c[v] = in_w[v];
        }
        if (!has_cycle(g, removed_w) || !has_cycle(g, removed_c)) return;
        rep.value = value;
        rep.witness_cut = boundary(g, w);
        rep.side_with_cycle1 = w;
        VertexSet other;
        for (int v = 0; v < n; ++v)
            if (!in_w[v]) other.push_back(v);
        rep.side_with_cycle2 = other;
    };

    // Boundary of a candidate cycle as an upper bound, when cycle-separating.
    for (size_t i = 0; i < cands.size(); ++i) {
        VertexSet w = normalized_set(cands[i].vertices);
        consider(static_cast<int>(boundary(g, w).size()), w);
    }

    // Max-flow between contractions of vertex-disjoint candidate pairs.
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j) {
            if (!set_intersection(cands[i].vertices, cands[j].vertices).empty()) continue;
            std::vector<int> label(n, 0);
            for (int v : cands[i].vertices) label[v] = 1;
            for (int v : cands[j].vertices) label[v] = 2;
            std::vector<char> side;
            int cut = min_cut_between(g, label, &side);
            if (rep.value && *rep.value <= cut) continue;
            VertexSet w;
            for (int v = 0; v < n; ++v)
                if (side[v]) w.push_back(v);
            consider(cut, w);
        }

    return rep;
}

CyclicConnectivityReport cyclic_edge_connectivity_brute(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 32)
        throw std::invalid_argument("brute-force cyclic connectivity capped at 32 vertices");
    CyclicConnectivityReport rep;
    if (n < 2) return rep;

    // Per-vertex adjacency bitmasks; parallel edges tracked by count.
    std::vector<uint32_t> nbr(n, 0);
    std::vector<std::vector<int>> cnt(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edge_pairs()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
        ++cnt[u][v];
        ++cnt[v][u];
    }
    std::vector<int> wdeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) wdeg[v] += cnt[v][u];

    auto side_has_cycle = [&](uint32_t mask) {
        // component-wise edges >= vertices test restricted to mask
        uint32_t left = mask;
        while (left) {
            int r = __builtin_ctz(left);
            uint32_t comp = 1u << r, frontier = comp;
            while (frontier) {
                uint32_t next = 0;
                uint32_t f = frontier;
                while (f) {
                    int v = __builtin_ctz(f);
                    f &= f - 1;
                    next |= nbr[v] & mask & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            int verts = __builtin_popcount(comp);
            int edges = 0;
            uint32_t c = comp;
            while (c) {
                int v = __builtin_ctz(c);
                c &= c - 1;
                uint32_t d = comp & nbr[v];
                while (d) {
                    int u = __builtin_ctz(d);
                    d &= d - 1;
                    edges += cnt[v][u];
                }
            }
            edges /= 2;
            if (edges >= verts) return true;
            left &= ~comp;
        }
        return false;
    };

    int best = -1;
    uint32_t best_mask = 0;
    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    // Gray-code walk over subsets containing vertex 0; |boundary| maintained
    // incrementally.
    uint32_t mask = 1;  // {0}
    long cut = wdeg[0];
    auto try_mask = [&](uint32_t msk, long cutsize) {
        if (msk == 0 || msk == full) return;
        if (best >= 0 && cutsize >= best) return;
        if (side_has_cycle(msk) && side_has_cycle(full & ~msk)) {
            best = static_cast<int>(cutsize);
            best_mask = msk;
        }
    };
    try_mask(mask, cut);
    long steps = 1L << (n - 1);
    for (long i = 1; i < steps; ++i) {
        int bit = __builtin_ctzl(i) + 1;  // vertex 0 stays inside
        uint32_t vbit = 1u << bit;
        // Flipping vertex `bit`: edges to inside flip their crossing status.
        long inside = 0;
        uint32_t nb = nbr[bit] & mask & ~vbit;
        while (nb) {
            int u = __builtin_ctz(nb);
            nb &= nb - 1;
            inside += cnt[bit][u];
        }
        if (mask & vbit) {
            mask &= ~vbit;
            cut += 2 * inside - wdeg[bit];
        } else {
            mask |= vbit;
            cut += wdeg[bit] - 2 * inside;
        }
        try_mask(mask, cut);
    }

    if (best < 0) return rep;
    VertexSet w;
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v)) w.push_back(v);
    rep.value = best;
    rep.witness_cut = boundary(g, w);
    rep.side_with_cycle1 = w;
    VertexSet other;
    for (int v = 0; v < n; ++v)
        if (!(best_mask & (1u << v))) other.push_back(v);
    rep.side_with_cycle2 = other;
    return rep;
}

long moore_lower_bound(int g) {
    if (g < 3) throw std::invalid_argument("moore_lower_bound needs girth >= 3");
    if (g % 2 == 1) return 3L * (1L << ((g - 1) / 2)) - 2;
    return (1L << (g / 2 + 1)) - 2;
}

GirthHypothesisResult check_girth_hypothesis(const Multigraph& g, int c) {
    if (!g.is_cubic()) throw std::invalid_argument("check_girth_hypothesis needs a cubic graph");
    if (!cyclic_edge_connectivity(g).at_least(c)) return GirthHypothesisResult::HypothesisNotMet;
    if (is_exception_graph(g)) return GirthHypothesisResult::Holds;
    auto gi = girth(g);
    if (!gi || *gi >= c) return GirthHypothesisResult::Holds;
    return GirthHypothesisResult::Fails;
}

}  // namespace mf
