#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mf {

/// Sets of vertex ids / edge ids are kept as sorted, duplicate-free vectors.
using VertexSet = std::vector<int>;
using EdgeSet = std::vector<int>;

inline std::vector<int> normalized_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

inline bool set_contains(const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_symmetric_difference(const std::vector<int>& a,
                                                 const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Undirected multigraph with stable, dense edge ids.
///
/// Parallel edges are permitted, self-loops are not. The structure is
/// immutable after construction, so values can be shared freely between
/// threads.
class Multigraph {
public:
    struct Arc {
        int to;
        int edge;
    };

    Multigraph() : n_(0) {}

    Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), edges_(edges) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        adj_.assign(n_, {});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " has an endpoint outside [0, n)");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                            " (edge " + std::to_string(e) + ") rejected");
            adj_[u].push_back({v, e});
            adj_[v].push_back({u, e});
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(int e) const {
        check_edge(e);
        return edges_[e];
    }

    int other_end(int e, int v) const {
        auto [a, b] = endpoints(e);
        if (v == a) return b;
        if (v == b) return a;
        throw std::invalid_argument("vertex is not an endpoint of the edge");
    }

    bool is_incident(int e, int v) const {
        auto [a, b] = endpoints(e);
        return v == a || v == b;
    }

    const std::vector<Arc>& adj(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(adj(v).size()); }

    const std::vector<std::pair<int, int>>& edge_pairs() const { return edges_; }

    /// Lowest-id edge joining u and v, if any.
    std::optional<int> edge_between(int u, int v) const {
        check_vertex(v);
        int best = -1;
        for (const Arc& a : adj(u))
            if (a.to == v && (best < 0 || a.edge < best)) best = a.edge;
        if (best < 0) return std::nullopt;
        return best;
    }

    bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }

    bool is_regular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    bool is_cubic() const { return is_regular(3); }

    bool has_parallel_edges() const {
        for (int v = 0; v < n_; ++v) {
            std::vector<int> ns;
            for (const Arc& a : adj_[v]) ns.push_back(a.to);
            std::sort(ns.begin(), ns.end());
            if (std::adjacent_find(ns.begin(), ns.end()) != ns.end()) return true;
        }
        return false;
    }

    /// Structural equality: same vertex count and identical edge list
    /// (including edge order). Used to detect "same base graph".
    bool same_structure(const Multigraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

    VertexSet all_vertices() const {
        VertexSet v(n_);
        for (int i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    EdgeSet all_edges() const {
        EdgeSet e(edges_.size());
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) e[i] = i;
        return e;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }

    void check_edge(int e) const {
        if (e < 0 || e >= static_cast<int>(edges_.size()))
            throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    }

    void check_vertex_set(const VertexSet& s) const {
        for (int v : s) check_vertex(v);
    }

    void check_edge_set(const EdgeSet& s) const {
        for (int e : s) check_edge(e);
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Arc>> adj_;
};

/// A walk p0 p1 ... pm with all vertices distinct, together with the edge ids
/// realizing each consecutive pair.
struct PathSpec {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }

    EdgeSet edge_set() const { return normalized_set(edges); }
    VertexSet vertex_set() const { return normalized_set(vertices); }

    void validate(const Multigraph& g) const;

    /// Builds the path from a vertex list, picking the lowest-id edge for
    /// each consecutive pair.
    static PathSpec from_vertices(const Multigraph& g, const std::vector<int>& verts);

    /// Same path walked from the other end.
    PathSpec reversed() const {
        PathSpec p = *this;
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
        return p;
    }
};

/// Bipartition of the vertex set: disjoint sides covering V(G).
struct Partition {
    VertexSet side1;
    VertexSet side2;

    void validate(const Multigraph& g) const;
    bool in_side1(int v) const { return set_contains(side1, v); }
};

/// Result of deleting an edge set: same vertices, surviving edges renumbered
/// densely, with the remapping kept in both directions.
struct EdgeDeletion {
    Multigraph graph;
    std::vector<int> old_of_new;  // new edge id -> id in the host graph
    std::vector<int> new_of_old;  // host edge id -> new id, or -1 if deleted

    EdgeSet to_old(const EdgeSet& new_ids) const {
        EdgeSet out;
        out.reserve(new_ids.size());
        for (int e : new_ids) out.push_back(old_of_new.at(e));
        return normalized_set(std::move(out));
    }
};

/// Edges of g with exactly one end in w.
EdgeSet boundary(const Multigraph& g, const VertexSet& w);

/// Edges of g with both ends in s.
EdgeSet edges_within(const Multigraph& g, const VertexSet& s);

/// min over (a, b) in A x B of the shortest-path length; nullopt when no pair
/// is connected.
std::optional<int> subgraph_distance(const Multigraph& g, const VertexSet& a,
                                     const VertexSet& b);

/// Proper 2-colouring as a Partition, or nullopt when g is not bipartite.
/// In a disconnected graph the lowest-id vertex of each component goes to
/// side1.
std::optional<Partition> bipartition(const Multigraph& g);

EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& x);

/// Graph minus a vertex set, as an induced subgraph; old ids retained via
/// the maps.
struct VertexDeletion {
    Multigraph graph;
    std::vector<int> old_of_new;  // new vertex id -> host vertex id
    std::vector<int> new_of_old;  // host vertex id -> new id, or -1
    std::vector<int> edge_old_of_new;
};

VertexDeletion delete_vertices(const Multigraph& g, const VertexSet& s);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Multigraph& g);

/// Single-source shortest path lengths (unit edge lengths); -1 if unreachable.
std::vector<int> bfs_distances(const Multigraph& g, int source);

}  // namespace mf
