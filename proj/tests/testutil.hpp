#pragma once

// Shared test helpers: independent brute-force oracles (kept free of the
// library's algorithm paths) and deterministic random instances.

#include <functional>
#include <random>
#include <string>

#include "mf/graph.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(MF_SOURCE_DIR) + "/tests/data/" + name;
}

// Maximum matching size by branching on the lowest uncovered vertex.
inline int oracle_max_matching(const mf::Multigraph& g) {
    std::vector<char> used(g.vertex_count(), 0);
    std::function<int(int)> rec = [&](int v) -> int {
        while (v < g.vertex_count() && used[v]) ++v;
        if (v == g.vertex_count()) return 0;
        int best = rec(v + 1);  // leave v uncovered
        used[v] = 1;
        for (const auto& a : g.adj(v)) {
            if (used[a.to]) continue;
            used[a.to] = 1;
            best = std::max(best, 1 + rec(v + 1));
            used[a.to] = 0;
        }
        used[v] = 0;
        return best;
    };
    return rec(0);
}

// Maximum independent set size by include/exclude recursion.
inline int oracle_max_independent(const mf::Multigraph& g) {
    int n = g.vertex_count();
    std::function<int(int, std::vector<char>&)> rec = [&](int v,
                                                          std::vector<char>& banned) -> int {
        while (v < n && banned[v]) ++v;
        if (v == n) return 0;
        std::vector<char> saved = banned;
        banned[v] = 1;
        int best = rec(v + 1, banned);  // exclude v
        banned = saved;
        banned[v] = 1;
        for (const auto& a : g.adj(v)) banned[a.to] = 1;
        best = std::max(best, 1 + rec(v + 1, banned));
        banned = saved;
        return best;
    };
    std::vector<char> banned(n, 0);
    return rec(0, banned);
}

// Girth by DFS enumeration of closed walks from each start vertex.
inline int oracle_girth(const mf::Multigraph& g) {  // -1 for forests
    int best = -1;
    int n = g.vertex_count();
    std::vector<char> onpath(n, 0);
    std::function<void(int, int, int, int)> dfs = [&](int start, int v, int in_edge,
                                                      int depth) {
        if (best > 0 && depth >= best) return;
        for (const auto& a : g.adj(v)) {
            if (a.edge == in_edge) continue;
            if (a.to == start) {
                if (best < 0 || depth + 1 < best) best = depth + 1;
                continue;
            }
            if (onpath[a.to] || a.to < start) continue;
            onpath[a.to] = 1;
            dfs(start, a.to, a.edge, depth + 1);
            onpath[a.to] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        onpath[s] = 1;
        dfs(s, s, -1, 0);
        onpath[s] = 0;
    }
    return best;
}

// Max over all S of oc(G-S) - |S| plus the largest |S| attaining it (n <= 20).
inline std::pair<int, int> oracle_max_deficiency(const mf::Multigraph& g) {
    int n = g.vertex_count();
    int best_def = -n - 1, best_size = 0;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<char> in_s(n, 0);
        for (int v = 0; v < n; ++v) in_s[v] = (mask >> v) & 1;
        std::vector<int> comp(n, -1);
        int oc = 0;
        for (int r = 0; r < n; ++r) {
            if (in_s[r] || comp[r] >= 0) continue;
            int size = 0;
            std::vector<int> stack{r};
            comp[r] = r;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& a : g.adj(v))
                    if (!in_s[a.to] && comp[a.to] < 0) {
                        comp[a.to] = r;
                        stack.push_back(a.to);
                    }
            }
            if (size % 2 == 1) ++oc;
        }
        int s_size = __builtin_popcountl(mask);
        int def = oc - s_size;
        if (def > best_def || (def == best_def && s_size > best_size)) {
            best_def = def;
            best_size = s_size;
        }
    }
    return {best_def, best_size};
}

inline mf::Multigraph random_gnp(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) es.push_back({i, j});
    return mf::Multigraph(n, es);
}

// Random simple cubic graph via stub pairing; retries until simple.
inline mf::Multigraph random_cubic(int n, unsigned seed) {
    std::mt19937 rng(seed);
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> es;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || adj[u][v]) ok = false;
            else {
                adj[u][v] = adj[v][u] = 1;
                es.push_back({u, v});
            }
        }
        if (ok) return mf::Multigraph(n, es);
    }
}

inline mf::VertexSet random_vertex_subset(const mf::Multigraph& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(0.5);
    mf::VertexSet w;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (coin(rng)) w.push_back(v);
    return w;
}

}  // namespace testutil
