#pragma once

#include <optional>

#include "mf/graph.hpp"

namespace mf {

struct Matching {
    EdgeSet edges;

    int size() const { return static_cast<int>(edges.size()); }
};

/// True when the edge set is pairwise vertex-disjoint.
bool is_valid_matching(const Multigraph& g, const Matching& m);

/// True when the matching covers every vertex.
bool is_perfect_matching(const Multigraph& g, const Matching& m);

/// mate[v] = matched partner of v, or -1. Deterministic for a fixed edge
/// order (fixed vertex scan order, blossom contraction).
std::vector<int> maximum_matching_mates(const Multigraph& g);

/// Maximum-cardinality matching (Edmonds blossom). For matched pairs joined
/// by parallel edges the lowest edge id is reported.
Matching maximum_matching(const Multigraph& g);

/// A perfect matching of g disjoint from x, or nullopt exactly when g - x
/// has none. Edge ids refer to g.
std::optional<Matching> perfect_matching_avoiding(const Multigraph& g, const EdgeSet& x);

/// Gallai-Edmonds partition: D = vertices missed by some maximum matching,
/// A = neighbours of D outside D, C = the rest.
struct GEDecomposition {
    VertexSet D;
    VertexSet A;
    VertexSet C;
};

GEDecomposition gallai_edmonds(const Multigraph& g);

/// Tutte witness: S together with the odd components of G - S.
struct Barrier {
    VertexSet S;
    std::vector<VertexSet> odd_components;
    int deficiency = 0;  // oc(G - S) - |S|
};

/// Recomputes the component structure of g - S and checks the stored fields.
bool barrier_is_consistent(const Multigraph& g, const Barrier& b);

/// Barrier maximizing oc(G-S) - |S|, grown from the Gallai-Edmonds A-set by
/// absorbing the neighbour of a leaf of a non-singleton component whenever
/// that keeps the deficiency. By Berge-Tutte the deficiency always equals
/// |V| - 2 * maximum matching size.
Barrier max_deficiency_barrier(const Multigraph& g);

}  // namespace mf
