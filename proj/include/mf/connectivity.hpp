#pragma once

#include <optional>

#include "mf/graph.hpp"

namespace mf {

/// Length of a shortest circuit; parallel edges give 2; nullopt for forests.
std::optional<int> girth(const Multigraph& g);

/// Global minimum edge cut via repeated max-flow. Requires n >= 2.
int edge_connectivity(const Multigraph& g);

/// True for the three cubic graphs without a cycle-separating edge cut:
/// K_2^3, K_4, K_{3,3}.
bool is_exception_graph(const Multigraph& g);

struct CyclicConnectivityReport {
    std::optional<int> value;  // nullopt = no cycle-separating cut exists
    std::optional<EdgeSet> witness_cut;
    std::optional<VertexSet> side_with_cycle1;
    std::optional<VertexSet> side_with_cycle2;

    bool is_infinite() const { return !value.has_value(); }
    /// value >= h, with the infinite convention.
    bool at_least(int h) const { return !value || *value >= h; }
};

/// Minimum size of an edge cut leaving a circuit on both sides.
///
/// Computed from shortest-cycle candidates (one through each edge, plus a
/// disjoint partner cycle per candidate) by max-flow between contracted
/// cycle pairs; the boundary of a candidate cycle's vertex set serves as an
/// upper bound whenever it is cycle-separating.
CyclicConnectivityReport cyclic_edge_connectivity(const Multigraph& g);

/// Exact reference: enumerates every vertex bipartition (Gray code) and
/// takes the smallest boundary with circuits on both sides. n <= 32.
CyclicConnectivityReport cyclic_edge_connectivity_brute(const Multigraph& g);

/// Minimum order of a cubic graph with the given girth (Moore bound):
/// 3 * 2^((g-1)/2) - 2 for odd g, 2^(g/2 + 1) - 2 for even g. Requires g >= 3.
long moore_lower_bound(int g);

enum class GirthHypothesisResult {
    HypothesisNotMet,  // g is not cyclically c-edge-connected
    Holds,             // exception graph, or girth >= c
    Fails,             // would contradict the girth lemma
};

/// Oracle for the girth lemma: a cubic cyclically c-edge-connected graph has
/// no circuit shorter than c unless it is K_2^3, K_4 or K_{3,3}.
GirthHypothesisResult check_girth_hypothesis(const Multigraph& g, int c);

/// Internal kernel, exposed for reuse: minimum edge cut separating the
/// vertices labelled `a` from those labelled `b` (labels: 0 = free,
/// 1 = source side, 2 = sink side). Sources/sinks are contracted.
int min_cut_between(const Multigraph& g, const std::vector<int>& label,
                    std::vector<char>* source_side = nullptr);

}  // namespace mf
