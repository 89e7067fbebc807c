#pragma once

#include <optional>

#include "mf/graph.hpp"

namespace mf {

/// Edge-signed graph: `negative` is the set of negative edges.
struct SignedGraph {
    Multigraph base;
    EdgeSet negative;

    SignedGraph(Multigraph b, EdgeSet neg) : base(std::move(b)), negative(std::move(neg)) {
        base.check_edge_set(negative);
        negative = normalized_set(negative);
    }
};

/// Switching at W inverts the sign of every boundary edge: the negative set
/// becomes the symmetric difference with bd(W). Involutive.
SignedGraph switched(const SignedGraph& sg, const VertexSet& w);

/// A switching set W with neg(a) delta bd(W) = neg(b), when the two
/// signatures are switching-equivalent; nullopt otherwise. Found by sign
/// propagation along a spanning forest with all non-tree edges verified.
/// Canonical choice: per connected component, the side not containing the
/// component's lowest-id vertex.
std::optional<VertexSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// A side W such that every edge outside `a` crosses W and every edge of `a`
/// does not, i.e. a bipartition of g - a with the a-edges inside the sides
/// (the switching set taking (g, a) to the all-negative signature).
std::optional<VertexSet> monochrome_split(const Multigraph& g, const EdgeSet& a);

/// Bipartitions of g - a and g - b with the correspondence between them.
/// proof_route is true when both removed sets sit inside the partition
/// sides (the situation the switching argument needs); otherwise the
/// correspondence is derived formally from V1 and side properness in g - b
/// is not guaranteed.
struct PartitionCorrespondence {
    VertexSet v1a, v2a;
    VertexSet v1b, v2b;
    bool proof_route = false;
};

/// Produces a partition (V1, V2) of V(g) whose boundary is exactly
/// a delta b, together with the bipartition correspondence
/// v1b = v1a delta V1 = v2a delta V2 (and symmetrically).
/// Throws when g - a or g - b is not bipartite, or when a delta b is not an
/// edge cut.
std::pair<Partition, PartitionCorrespondence> cut_from_bipartite_pair(const Multigraph& g,
                                                                      const EdgeSet& a,
                                                                      const EdgeSet& b);

}  // namespace mf
