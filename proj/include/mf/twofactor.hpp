#pragma once

#include <optional>

#include "mf/graph.hpp"
#include "mf/matching.hpp"
#include "mf/signed_graph.hpp"

namespace mf {

/// Spanning 2-regular subgraph; in a cubic graph, the complement of a
/// perfect matching.
struct TwoFactor {
    EdgeSet edges;
};

bool is_two_factor(const Multigraph& g, const TwoFactor& tf);

/// Length of the circuit of the 2-factor passing through v (edge-based walk,
/// safe with parallel edges).
int circuit_length_through(const Multigraph& g, const TwoFactor& tf, int v);

/// A 2-factor containing the path, i.e. E(g) minus a perfect matching that
/// avoids E(P); nullopt exactly when g - E(P) has no perfect matching.
std::optional<TwoFactor> extends_to_two_factor(const Multigraph& g, const PathSpec& p);

/// Witness that a path is non-extendable: an independent set I of g - E(P)
/// with |I| > n/2 holding every inner path vertex, the edge set Y whose
/// removal makes g bipartite with sides I and V - I, and Y split into path
/// edges (B), close edges (C, distance <= 4l-9 from P) and distant edges
/// (D, distance >= 4l-8).
struct PathWitness {
    PathSpec path;
    VertexSet I;
    EdgeSet Y;
    EdgeSet path_edges_in_y;  // B
    EdgeSet close_edges;      // C
    EdgeSet distant_edges;    // D
};

struct WitnessOptions {
    int cap = 24;                     // exact independent-set search cap
    std::optional<VertexSet> seed;    // start from this independent set instead
};

/// Requires extends_to_two_factor(g, p) == nullopt and length >= 3. The
/// independent set is found exactly (or taken from the seed) and then
/// repaired by the swap argument (p_i in, its off-path neighbour out) until
/// all inner path vertices lie in I.
PathWitness build_path_witness(const Multigraph& g, const PathSpec& p,
                               const WitnessOptions& opts = {});

/// Partition with boundary Y(P) delta Y(Q), for two non-extendable paths.
Partition zaslavsky_partition(const Multigraph& g, const PathWitness& wp,
                              const PathWitness& wq);

/// Two 3-paths sharing their middle edge, endpoints pairwise distinct, with
/// a proper 2-colouring of g - {v2, v3} giving both P-endpoints one colour
/// and both Q-endpoints the other.
struct P1Witness {
    std::pair<int, int> shared_edge;
    Partition colouring;  // covers V(g) minus the two middle vertices
};

std::optional<P1Witness> detect_position_p1(const Multigraph& g, const PathSpec& p,
                                            const PathSpec& q);

/// Certificate structure of a non-extendable 4-path: the size of V(P) cap
/// I(P), the lone complement edge r (when the size is 5) and the derived
/// edge set X_i, with the three structural claims checked.
struct FourPathCertificate {
    int intersection_size = 0;       // 4 or 5
    std::optional<int> r;            // only when intersection_size == 5
    EdgeSet xi;
    bool hypothesis_met = false;     // cubic and cyclically 7-edge-connected
    bool r_not_adjacent_to_path = true;  // claim 1 (size 5 only)
    bool bipartite_with_claimed_side = false;  // claims 2/3: g - Xi bipartite
                                               // with side J+{v2} or J+{v2,v4}
    bool xi_endpoints_same_side = true;        // claim 3 (size 5 only)

    bool claims_ok() const {
        return r_not_adjacent_to_path && bipartite_with_claimed_side &&
               xi_endpoints_same_side;
    }
};

FourPathCertificate analyze_4path(const Multigraph& g, const PathSpec& p,
                                  const WitnessOptions& opts = {});

/// A 2-factor whose circuit through v has length different from 7, obtained
/// by extending a geodesic 4-path out of v (falls back to exhaustive
/// 2-factor search). Requires a cubic cyclically 7-edge-connected graph.
TwoFactor verify_vertex_seven_circuit(const Multigraph& g, int v);

/// Parameters of the two-path counterexample construction: a cubic graph on
/// 12 vertices whose subdivision provides the bipartite frame H.
struct ConstructionParams {
    Multigraph cubic_seed;
};

ConstructionParams default_construction_params();

struct Counterexample {
    Multigraph graph;
    PathSpec p1, p2;
    VertexSet n_side;       // degree-3 side of H
    VertexSet x_vertices;   // x1..x7 in order
    VertexSet y_vertices;   // y1..y7 in order
    VertexSet witness1;     // {x1..x7} + N + {y1,y3,y5,y7}
    VertexSet witness2;     // {y1..y7} + N + {x1,x3,x5,x7}
};

/// The 44-vertex cubic graph with two long paths neither of which extends to
/// a 2-factor, together with the two independent-set witnesses.
Counterexample build_counterexample(const ConstructionParams& params);

}  // namespace mf
