#include "mf/lm.hpp"

#include <cstdint>
#include <unordered_set>

#include "mf/connectivity.hpp"

namespace mf {

namespace {

int residual_degree(const Multigraph& g, const std::vector<char>& removed, int v) {
    int d = 0;
    for (const auto& a : g.adj(v))
        if (!removed[a.to]) ++d;
    return d;
}

int lowest_isolated(const Multigraph& g, const std::vector<char>& removed) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v] && residual_degree(g, removed, v) == 0) return v;
    return -1;
}

int lowest_leaf(const Multigraph& g, const std::vector<char>& removed) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v] && residual_degree(g, removed, v) == 1) return v;
    return -1;
}

int unique_neighbour(const Multigraph& g, const std::vector<char>& removed, int v) {
    for (const auto& a : g.adj(v))
        if (!removed[a.to]) return a.to;
    return -1;
}

int boundary_size(const Multigraph& g, const std::vector<char>& removed) {
    int c = 0;
    for (auto [u, v] : g.edge_pairs())
        if (removed[u] != removed[v]) ++c;
    return c;
}

LMCertificate finish(const Multigraph& g, std::vector<LMStep> steps, int isolated) {
    LMCertificate cert;
    cert.steps = std::move(steps);
    cert.isolated = isolated;
    std::vector<char> removed(g.vertex_count(), 0);
    for (const LMStep& s : cert.steps) {
        removed[s.leaf] = removed[s.neighbour] = 1;
        cert.cut_profile.push_back(boundary_size(g, removed));
    }
    return cert;
}

}  // namespace

std::optional<LMCertificate> lm_reduce_greedy(const Multigraph& g) {
    std::vector<char> removed(g.vertex_count(), 0);
    std::vector<LMStep> steps;
    while (true) {
        int iso = lowest_isolated(g, removed);
        if (iso >= 0) return finish(g, steps, iso);
        int leaf = lowest_leaf(g, removed);
        if (leaf < 0) return std::nullopt;
        int w = unique_neighbour(g, removed, leaf);
        removed[leaf] = removed[w] = 1;
        steps.push_back({leaf, w});
    }
}

namespace {

struct ExhaustiveSearch {
    const Multigraph& g;
    int n;
    std::unordered_set<uint64_t> dead;  // residual states with no winning order
    std::vector<LMStep> steps;
    size_t budget = 1u << 22;

    explicit ExhaustiveSearch(const Multigraph& graph)
        : g(graph), n(graph.vertex_count()) {}

    bool dfs(uint64_t removed_mask, std::vector<char>& removed) {
        for (int v = 0; v < n; ++v)
            if (!removed[v] && residual_degree(g, removed, v) == 0) return true;
        if (dead.count(removed_mask)) return false;
        for (int v = 0; v < n; ++v) {
            if (removed[v] || residual_degree(g, removed, v) != 1) continue;
            int w = unique_neighbour(g, removed, v);
            removed[v] = removed[w] = 1;
            steps.push_back({v, w});
            if (dfs(removed_mask | (1ull << v) | (1ull << w), removed)) return true;
            steps.pop_back();
            removed[v] = removed[w] = 0;
        }
        if (dead.size() >= budget)
            throw std::runtime_error("LM exhaustive search exceeded its state budget");
        dead.insert(removed_mask);
        return false;
    }
};

}  // namespace

std::optional<LMCertificate> lm_reduce_exhaustive(const Multigraph& g) {
    if (g.vertex_count() > 64)
        throw std::invalid_argument("lm_reduce_exhaustive capped at 64 vertices");
    ExhaustiveSearch search(g);
    std::vector<char> removed(g.vertex_count(), 0);
    if (!search.dfs(0, removed)) return std::nullopt;
    // Replay the found order to name the lowest-id isolated vertex.
    std::vector<char> rm(g.vertex_count(), 0);
    std::vector<LMStep> prefix;
    for (const LMStep& s : search.steps) {
        if (lowest_isolated(g, rm) >= 0) break;
        rm[s.leaf] = rm[s.neighbour] = 1;
        prefix.push_back(s);
    }
    return finish(g, prefix, lowest_isolated(g, rm));
}

LMValidationReport validate_lm_certificate(const Multigraph& g, const LMCertificate& cert,
                                           const EdgeSet& x_in, int d) {
    EdgeSet x = normalized_set(x_in);
    LMValidationReport rep;
    auto fail = [&rep](int step, const std::string& why) {
        rep.valid = false;
        rep.failed_step = step;
        rep.error = why;
        return rep;
    };

    g.check_edge_set(x);
    EdgeDeletion del = delete_edges(g, x);
    const Multigraph& gx = del.graph;
    std::vector<char> removed(g.vertex_count(), 0);

    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const LMStep& s = cert.steps[i];
        if (s.leaf < 0 || s.leaf >= g.vertex_count() || s.neighbour < 0 ||
            s.neighbour >= g.vertex_count())
            return fail(static_cast<int>(i), "step names an unknown vertex");
        if (lowest_isolated(gx, removed) >= 0)
            return fail(static_cast<int>(i), "isolated vertex already present before step");
        if (removed[s.leaf] || removed[s.neighbour])
            return fail(static_cast<int>(i), "step touches an already removed vertex");
        if (residual_degree(gx, removed, s.leaf) != 1)
            return fail(static_cast<int>(i), "leaf does not have degree 1");
        if (unique_neighbour(gx, removed, s.leaf) != s.neighbour)
            return fail(static_cast<int>(i), "named neighbour is not the leaf's neighbour");
        removed[s.leaf] = removed[s.neighbour] = 1;
        if (i < cert.cut_profile.size() &&
            cert.cut_profile[i] != boundary_size(gx, removed))
            return fail(static_cast<int>(i), "cut profile mismatch");
    }
    if (cert.cut_profile.size() != cert.steps.size())
        return fail(-1, "cut profile length mismatch");
    if (cert.isolated < 0 || cert.isolated >= g.vertex_count() || removed[cert.isolated])
        return fail(-1, "isolated vertex is invalid or was removed");
    if (residual_degree(gx, removed, cert.isolated) != 0)
        return fail(-1, "claimed isolated vertex still has neighbours");
    rep.valid = true;

    int s = static_cast<int>(cert.steps.size());
    rep.lemcor2_applicable = s >= 2 && static_cast<int>(x.size()) == d &&
                             g.vertex_count() % 2 == 0 && g.is_regular(d) &&
                             cyclic_edge_connectivity(g).at_least(d + 1);
    if (!rep.lemcor2_applicable) return rep;

    // (i) every edge of X meets V_2 = {v_1, v_2}
    for (int e : x) {
        auto [a, b] = g.endpoints(e);
        int v1 = cert.steps[0].leaf, v2 = cert.steps[1].leaf;
        if (a != v1 && a != v2 && b != v1 && b != v2)
            rep.lemcor2_violations.push_back("(i): edge " + std::to_string(e) +
                                             " misses {v1, v2}");
    }
    // (ii) cut sizes in g with X present
    std::vector<char> in_u(g.vertex_count(), 0);
    for (int t = 1; t <= s; ++t) {
        in_u[cert.steps[t - 1].leaf] = in_u[cert.steps[t - 1].neighbour] = 1;
        int cut = boundary_size(g, in_u);
        int limit = t == 1 ? 2 * d - 2 : 2 * d;
        if (cut > limit)
            rep.lemcor2_violations.push_back("(ii): |bd(U_" + std::to_string(t) + ")| = " +
                                             std::to_string(cut) + " > " +
                                             std::to_string(limit));
    }
    // (iii) edges at V_t stay within X or V_t-W_t
    for (int t = 1; t <= s; ++t) {
        std::vector<char> in_v(g.vertex_count(), 0), in_w(g.vertex_count(), 0);
        for (int j = 0; j < t; ++j) {
            in_v[cert.steps[j].leaf] = 1;
            in_w[cert.steps[j].neighbour] = 1;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (!in_v[a] && !in_v[b]) continue;
            if (set_contains(x, e)) continue;
            bool joins_w = (in_v[a] && in_w[b]) || (in_v[b] && in_w[a]);
            if (!joins_w)
                rep.lemcor2_violations.push_back("(iii): edge " + std::to_string(e) +
                                                 " at V_" + std::to_string(t) +
                                                 " leaves X and W_" + std::to_string(t));
        }
    }
    rep.lemcor2_ok = rep.lemcor2_violations.empty();
    return rep;
}

}  // namespace mf
