#include "mf/twofactor.hpp"

#include <functional>

#include "mf/connectivity.hpp"
#include "mf/preclusion.hpp"
#include "mf/zoo.hpp"

namespace mf {

bool is_two_factor(const Multigraph& g, const TwoFactor& tf) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e : tf.edges) {
        auto [u, v] = g.endpoints(e);
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 2) return false;
    return true;
}

int circuit_length_through(const Multigraph& g, const TwoFactor& tf, int v) {
    if (!is_two_factor(g, tf)) throw std::invalid_argument("not a 2-factor");
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int e : tf.edges) {
        auto [a, b] = g.endpoints(e);
        at[a].push_back(e);
        at[b].push_back(e);
    }
    int cur = v, via = at[v][0], len = 0;
    do {
        cur = g.other_end(via, cur);
        ++len;
        via = at[cur][0] == via ? at[cur][1] : at[cur][0];
    } while (cur != v);
    return len;
}

std::optional<TwoFactor> extends_to_two_factor(const Multigraph& g, const PathSpec& p) {
    if (!g.is_cubic()) throw std::invalid_argument("extends_to_two_factor needs a cubic graph");
    p.validate(g);
    auto pm = perfect_matching_avoiding(g, p.edge_set());
    if (!pm) return std::nullopt;
    return TwoFactor{set_difference(g.all_edges(), pm->edges)};
}

namespace {

bool independent_in(const Multigraph& g, const EdgeSet& skip, const VertexSet& s) {
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(skip, e)) continue;
        auto [u, v] = g.endpoints(e);
        if (set_contains(s, u) && set_contains(s, v)) return false;
    }
    return true;
}

}  // namespace

PathWitness build_path_witness(const Multigraph& g, const PathSpec& p,
                               const WitnessOptions& opts) {
    if (!g.is_cubic()) throw std::invalid_argument("build_path_witness needs a cubic graph");
    p.validate(g);
    int len = p.length();
    if (len < 3) throw std::invalid_argument("build_path_witness needs a path of length >= 3");
    if (extends_to_two_factor(g, p))
        throw std::invalid_argument("path extends to a 2-factor; no witness exists");

    EdgeSet px = p.edge_set();
    int n = g.vertex_count();
    VertexSet I;
    if (opts.seed) {
        I = normalized_set(*opts.seed);
        if (!independent_in(g, px, I) || 2 * static_cast<int>(I.size()) <= n)
            throw std::invalid_argument("seed is not a large independent set of g - E(P)");
    } else {
        if (n > opts.cap) throw std::invalid_argument("build_path_witness: cap exceeded");
        EdgeDeletion del = delete_edges(g, px);
        I = maximum_independent_set(del.graph, p.vertices, opts.cap);
        if (2 * static_cast<int>(I.size()) <= n)
            throw std::invalid_argument(
                "g - E(P) has no independent set above half the vertices");
    }

    // Swap inner path vertices in: p_i's only neighbour in g - E(P) is its
    // off-path neighbour q_i, so p_i enters as q_i leaves (or for free).
    for (int guard = 0; guard <= n; ++guard) {
        int missing = -1;
        for (int i = 1; i < len; ++i)
            if (!set_contains(I, p.vertices[i])) {
                missing = i;
                break;
            }
        if (missing < 0) break;
        if (guard == n)
            throw std::runtime_error("inner-vertex swap did not converge");
        int pi = p.vertices[missing];
        int qi = -1;
        for (const auto& a : g.adj(pi))
            if (a.to != p.vertices[missing - 1] && a.to != p.vertices[missing + 1]) qi = a.to;
        if (qi < 0) throw std::logic_error("cubic inner vertex without an off-path neighbour");
        if (set_contains(I, qi)) I = set_difference(I, {qi});
        I = set_union(I, {pi});
    }

    PathWitness w;
    w.path = p;
    w.I = I;

    VertexSet rest = set_difference(g.all_vertices(), I);
    w.Y = edges_within(g, rest);
    for (int e : px) {
        auto [u, v] = g.endpoints(e);
        if (set_contains(I, u) && set_contains(I, v)) w.Y.push_back(e);
    }
    w.Y = normalized_set(std::move(w.Y));

    // g - Y must be bipartite with sides exactly I and V - I.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(w.Y, e)) continue;
        auto [u, v] = g.endpoints(e);
        if (set_contains(I, u) == set_contains(I, v))
            throw std::logic_error("witness edge set Y does not split g over (I, V-I)");
    }

    int close_limit = 4 * len - 9;
    w.path_edges_in_y = set_intersection(w.Y, px);
    for (int e : set_difference(w.Y, w.path_edges_in_y)) {
        auto [u, v] = g.endpoints(e);
        auto dist = subgraph_distance(g, {std::min(u, v), std::max(u, v)},
                                      p.vertex_set());
        if (dist && *dist <= close_limit) w.close_edges.push_back(e);
        else w.distant_edges.push_back(e);
    }
    return w;
}

Partition zaslavsky_partition(const Multigraph& g, const PathWitness& wp,
                              const PathWitness& wq) {
    g.check_edge_set(wp.Y);
    g.check_edge_set(wq.Y);
    return cut_from_bipartite_pair(g, wp.Y, wq.Y).first;
}

std::optional<P1Witness> detect_position_p1(const Multigraph& g, const PathSpec& p,
                                            const PathSpec& q) {
    if (!g.is_cubic()) throw std::invalid_argument("detect_position_p1 needs a cubic graph");
    p.validate(g);
    q.validate(g);
    if (p.length() != 3 || q.length() != 3)
        throw std::invalid_argument("detect_position_p1 needs paths of length 3");
    if (p.edge_set() == q.edge_set())
        throw std::invalid_argument("detect_position_p1 needs distinct paths");

    if (p.edges[1] != q.edges[1]) return std::nullopt;
    int v1 = p.vertices[0], v4 = p.vertices[3];
    int w1 = q.vertices[0], w4 = q.vertices[3];
    if (normalized_set({v1, v4, w1, w4}).size() != 4) return std::nullopt;

    int v2 = p.vertices[1], v3 = p.vertices[2];
    VertexDeletion del = delete_vertices(g, normalized_set({v2, v3}));
    auto bip = bipartition(del.graph);
    if (!bip) return std::nullopt;

    std::vector<VertexSet> comps = components(del.graph);
    std::vector<int> comp_of(del.graph.vertex_count(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<int> colour(del.graph.vertex_count(), 0);
    for (int v : bip->side2) colour[v] = 1;

    int nv1 = del.new_of_old[v1], nv4 = del.new_of_old[v4];
    int nw1 = del.new_of_old[w1], nw4 = del.new_of_old[w4];
    int nc = static_cast<int>(comps.size());
    if (nc > 20) throw std::runtime_error("detect_position_p1: too many components");
    for (long flip = 0; flip < (1L << nc); ++flip) {
        auto c = [&](int v) { return colour[v] ^ static_cast<int>((flip >> comp_of[v]) & 1); };
        if (c(nv1) != c(nv4) || c(nw1) != c(nw4) || c(nv1) == c(nw1)) continue;
        P1Witness wit;
        wit.shared_edge = {std::min(v2, v3), std::max(v2, v3)};
        for (int v = 0; v < del.graph.vertex_count(); ++v)
            (c(v) == 0 ? wit.colouring.side1 : wit.colouring.side2)
                .push_back(del.old_of_new[v]);
        return wit;
    }
    return std::nullopt;
}

FourPathCertificate analyze_4path(const Multigraph& g, const PathSpec& p,
                                  const WitnessOptions& opts) {
    if (!g.is_cubic()) throw std::invalid_argument("analyze_4path needs a cubic graph");
    p.validate(g);
    if (p.length() != 4) throw std::invalid_argument("analyze_4path needs a path of length 4");
    if (extends_to_two_factor(g, p))
        throw std::invalid_argument("analyze_4path: path extends to a 2-factor");

    FourPathCertificate cert;
    cert.hypothesis_met = cyclic_edge_connectivity(g).at_least(7);

    PathWitness wit = build_path_witness(g, p, opts);
    const VertexSet& I = wit.I;
    VertexSet J = set_difference(g.all_vertices(), I);
    cert.intersection_size =
        static_cast<int>(set_intersection(p.vertex_set(), I).size());
    if (cert.intersection_size != 4 && cert.intersection_size != 5)
        throw std::logic_error("intersection with the witness is neither 4 nor 5");

    // Orient so that when one endpoint is outside I, it is the last one.
    PathSpec path = p;
    if (cert.intersection_size == 4 && !set_contains(I, path.vertices[0]))
        path = path.reversed();

    auto off_path_edge = [&](int idx) {
        int v = path.vertices[idx];
        int prev = idx > 0 ? path.vertices[idx - 1] : -1;
        int next = idx + 1 < static_cast<int>(path.vertices.size())
                       ? path.vertices[idx + 1]
                       : -1;
        for (const auto& a : g.adj(v))
            if (a.to != prev && a.to != next) return a.edge;
        throw std::logic_error("no off-path edge at an inner path vertex");
    };

    VertexSet claimed_side;
    if (cert.intersection_size == 4) {
        cert.xi = normalized_set({off_path_edge(1), path.edges[2]});
        claimed_side = set_union(J, {path.vertices[1]});
    } else {
        EdgeSet inside_j = edges_within(g, J);
        if (inside_j.size() != 1)
            throw std::logic_error("complement of the witness does not induce a single edge");
        cert.r = inside_j[0];
        auto [ru, rv] = g.endpoints(*cert.r);
        cert.r_not_adjacent_to_path = !set_contains(p.vertex_set(), ru) &&
                                      !set_contains(p.vertex_set(), rv);
        cert.xi = normalized_set({off_path_edge(1), off_path_edge(3), *cert.r});
        claimed_side = set_union(J, {path.vertices[1], path.vertices[3]});
    }

    // Claims 2/3: g - Xi is bipartite with the claimed side as one class.
    cert.bipartite_with_claimed_side = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(cert.xi, e)) continue;
        auto [u, v] = g.endpoints(e);
        if (set_contains(claimed_side, u) == set_contains(claimed_side, v)) {
            cert.bipartite_with_claimed_side = false;
            break;
        }
    }
    if (cert.intersection_size == 5) {
        cert.xi_endpoints_same_side = true;
        for (int e : cert.xi) {
            auto [u, v] = g.endpoints(e);
            if (!set_contains(claimed_side, u) || !set_contains(claimed_side, v))
                cert.xi_endpoints_same_side = false;
        }
    }
    return cert;
}

namespace {

// Enumerates perfect matchings; the visitor returns true to stop early.
bool for_each_perfect_matching(const Multigraph& g, std::vector<char>& used,
                               EdgeSet& picked,
                               const std::function<bool(const EdgeSet&)>& visit) {
    int v = 0;
    while (v < g.vertex_count() && used[v]) ++v;
    if (v == g.vertex_count()) return visit(picked);
    for (const auto& a : g.adj(v)) {
        if (used[a.to] || a.to < v) continue;
        used[v] = used[a.to] = 1;
        picked.push_back(a.edge);
        if (for_each_perfect_matching(g, used, picked, visit)) return true;
        picked.pop_back();
        used[v] = used[a.to] = 0;
    }
    return false;
}

}  // namespace

TwoFactor verify_vertex_seven_circuit(const Multigraph& g, int v) {
    g.check_vertex(v);
    if (!g.is_cubic())
        throw std::invalid_argument("verify_vertex_seven_circuit needs a cubic graph");
    if (!cyclic_edge_connectivity(g).at_least(7))
        throw std::invalid_argument(
            "verify_vertex_seven_circuit: graph is not cyclically 7-edge-connected");

    // A geodesic 4-path out of v lies on its 2-factor circuit; a 7-circuit
    // would close it with 3 edges, contradicting distance 4.
    std::vector<int> dist = bfs_distances(g, v);
    std::vector<int> stack{v};
    std::optional<TwoFactor> found;
    std::function<bool()> extend = [&]() -> bool {
        if (stack.size() == 5) {
            PathSpec p = PathSpec::from_vertices(g, stack);
            if (auto tf = extends_to_two_factor(g, p)) {
                int len = circuit_length_through(g, *tf, v);
                if (len == 7) throw std::logic_error("geodesic extension closed a 7-circuit");
                found = *tf;
                return true;
            }
            return false;
        }
        int cur = stack.back();
        for (const auto& a : g.adj(cur)) {
            if (dist[a.to] != dist[cur] + 1) continue;
            stack.push_back(a.to);
            if (extend()) return true;
            stack.pop_back();
        }
        return false;
    };
    if (extend()) return *found;

    // Exhaustive fallback over all 2-factors.
    std::vector<char> used(g.vertex_count(), 0);
    EdgeSet picked;
    std::optional<TwoFactor> ok;
    for_each_perfect_matching(g, used, picked, [&](const EdgeSet& pm) {
        TwoFactor tf{set_difference(g.all_edges(), normalized_set(pm))};
        if (circuit_length_through(g, tf, v) != 7) {
            ok = tf;
            return true;
        }
        return false;
    });
    if (!ok)
        throw std::runtime_error(
            "verify_vertex_seven_circuit: no qualifying 2-factor found at desk scale");
    return *ok;
}

ConstructionParams default_construction_params() {
    return ConstructionParams{zoo::moebius_ladder(12)};
}

Counterexample build_counterexample(const ConstructionParams& params) {
    const Multigraph& seed = params.cubic_seed;
    if (!seed.is_cubic() || seed.vertex_count() != 12)
        throw std::invalid_argument(
            "build_counterexample: the seed must be a cubic graph on 12 vertices");

    // Layout: 0..11 = N (the seed's vertices), 12..29 = M (one subdivision
    // vertex per seed edge; 12..20 = a1..a9, 21..29 = b1..b9),
    // 30..36 = x1..x7, 37..43 = y1..y7.
    const int a0 = 12, b0 = 21, x0 = 30, y0 = 37;
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < 18; ++e) {
        auto [u, v] = seed.endpoints(e);
        es.push_back({u, a0 + e});
        es.push_back({v, a0 + e});
    }
    auto a = [&](int i) { return a0 + i - 1; };  // a1..a9 subdivide edges 0..8
    auto b = [&](int i) { return b0 + i - 1; };  // b1..b9 subdivide edges 9..17
    auto x = [&](int i) { return x0 + i - 1; };
    auto y = [&](int i) { return y0 + i - 1; };
    es.push_back({a(1), x(1)});
    es.push_back({a(8), x(7)});
    es.push_back({a(9), x(7)});
    es.push_back({b(1), y(1)});
    es.push_back({b(8), y(7)});
    es.push_back({b(9), y(7)});
    for (int i = 1; i <= 6; ++i) {
        es.push_back({a(i + 1), x(i)});
        es.push_back({b(i + 1), y(i)});
        es.push_back({x(i + 1), x(i)});
        es.push_back({y(i + 1), y(i)});
    }

    Counterexample c{Multigraph(44, es), {}, {}, {}, {}, {}, {}, {}};
    if (!c.graph.is_cubic())
        throw std::logic_error("counterexample construction is not cubic");

    std::vector<int> p1v, p2v;
    for (int i = 1; i <= 7; ++i) {
        p1v.push_back(x(i));
        p2v.push_back(y(i));
        c.x_vertices.push_back(x(i));
        c.y_vertices.push_back(y(i));
    }
    c.p1 = PathSpec::from_vertices(c.graph, p1v);
    c.p2 = PathSpec::from_vertices(c.graph, p2v);
    for (int v = 0; v < 12; ++v) c.n_side.push_back(v);

    c.witness1 = normalized_set({x(1), x(2), x(3), x(4), x(5), x(6), x(7), y(1), y(3),
                                 y(5), y(7)});
    c.witness1 = set_union(c.witness1, c.n_side);
    c.witness2 = normalized_set({y(1), y(2), y(3), y(4), y(5), y(6), y(7), x(1), x(3),
                                 x(5), x(7)});
    c.witness2 = set_union(c.witness2, c.n_side);
    return c;
}

}  // namespace mf
