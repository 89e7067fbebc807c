#include "mf/graph.hpp"

#include <queue>

namespace mf {

void PathSpec::validate(const Multigraph& g) const {
    if (vertices.empty()) throw std::invalid_argument("path has no vertices");
    if (edges.size() + 1 != vertices.size())
        throw std::invalid_argument("path edge count does not match vertex count");
    std::vector<int> seen = vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("path vertices are not distinct");
    for (int v : vertices) g.check_vertex(v);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = g.endpoints(edges[i]);
        int u = vertices[i], v = vertices[i + 1];
        if (!((a == u && b == v) || (a == v && b == u)))
            throw std::invalid_argument("path edge " + std::to_string(edges[i]) +
                                        " does not join consecutive path vertices");
    }
}

PathSpec PathSpec::from_vertices(const Multigraph& g, const std::vector<int>& verts) {
    PathSpec p;
    p.vertices = verts;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        auto e = g.edge_between(verts[i], verts[i + 1]);
        if (!e)
            throw std::invalid_argument("vertices " + std::to_string(verts[i]) + " and " +
                                        std::to_string(verts[i + 1]) + " are not adjacent");
        p.edges.push_back(*e);
    }
    p.validate(g);
    return p;
}

void Partition::validate(const Multigraph& g) const {
    g.check_vertex_set(side1);
    g.check_vertex_set(side2);
    if (!set_intersection(side1, side2).empty())
        throw std::invalid_argument("partition sides are not disjoint");
    if (static_cast<int>(side1.size() + side2.size()) != g.vertex_count())
        throw std::invalid_argument("partition does not cover the vertex set");
}

EdgeSet boundary(const Multigraph& g, const VertexSet& w) {
    g.check_vertex_set(w);
    VertexSet ws = normalized_set(w);
    EdgeSet out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (set_contains(ws, u) != set_contains(ws, v)) out.push_back(e);
    }
    return out;
}

EdgeSet edges_within(const Multigraph& g, const VertexSet& s) {
    g.check_vertex_set(s);
    VertexSet ss = normalized_set(s);
    EdgeSet out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (set_contains(ss, u) && set_contains(ss, v)) out.push_back(e);
    }
    return out;
}

std::vector<int> bfs_distances(const Multigraph& g, int source) {
    g.check_vertex(source);
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& a : g.adj(v))
            if (dist[a.to] < 0) {
                dist[a.to] = dist[v] + 1;
                q.push(a.to);
            }
    }
    return dist;
}

std::optional<int> subgraph_distance(const Multigraph& g, const VertexSet& a,
                                     const VertexSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("subgraph_distance: empty set");
    g.check_vertex_set(a);
    g.check_vertex_set(b);
    // Multi-source BFS from a, stop at the first vertex of b.
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int v : a) {
        if (dist[v] == 0) continue;
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (set_contains(b, v)) return dist[v];
        for (const auto& arc : g.adj(v))
            if (dist[arc.to] < 0) {
                dist[arc.to] = dist[v] + 1;
                q.push(arc.to);
            }
    }
    return std::nullopt;
}

std::optional<Partition> bipartition(const Multigraph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;  // lowest-id vertex of the component goes to side1
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : g.adj(v)) {
                if (colour[a.to] < 0) {
                    colour[a.to] = 1 - colour[v];
                    q.push(a.to);
                } else if (colour[a.to] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Partition p;
    for (int v = 0; v < g.vertex_count(); ++v)
        (colour[v] == 0 ? p.side1 : p.side2).push_back(v);
    return p;
}

EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& x) {
    g.check_edge_set(x);
    EdgeSet xs = normalized_set(x);
    EdgeDeletion d;
    d.new_of_old.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(xs, e)) continue;
        d.new_of_old[e] = static_cast<int>(kept.size());
        d.old_of_new.push_back(e);
        kept.push_back(g.endpoints(e));
    }
    d.graph = Multigraph(g.vertex_count(), kept);
    return d;
}

VertexDeletion delete_vertices(const Multigraph& g, const VertexSet& s) {
    g.check_vertex_set(s);
    VertexSet ss = normalized_set(s);
    VertexDeletion d;
    d.new_of_old.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (set_contains(ss, v)) continue;
        d.new_of_old[v] = static_cast<int>(d.old_of_new.size());
        d.old_of_new.push_back(v);
    }
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (d.new_of_old[u] < 0 || d.new_of_old[v] < 0) continue;
        d.edge_old_of_new.push_back(e);
        kept.push_back({d.new_of_old[u], d.new_of_old[v]});
    }
    d.graph = Multigraph(static_cast<int>(d.old_of_new.size()), kept);
    return d;
}

std::vector<VertexSet> components(const Multigraph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::queue<int> q;
        seen[root] = 1;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (const auto& a : g.adj(v))
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        out.push_back(normalized_set(std::move(comp)));
    }
    return out;
}

}  // namespace mf
