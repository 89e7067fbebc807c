#pragma once

#include <optional>
#include <string>
#include <variant>

#include "mf/graph.hpp"
#include "mf/lm.hpp"
#include "mf/matching.hpp"

namespace mf {

/// Exact maximum independent set by branch and bound (n <= cap). Among the
/// maximum sets, ties go first to the largest overlap with `prefer`, then to
/// the lexicographically smallest sorted id sequence.
VertexSet maximum_independent_set(const Multigraph& g, const VertexSet& prefer = {},
                                  int cap = 24);

/// Independent set of g - x holding more than half of the vertices, plus the
/// edges of g - x induced by its complement.
struct IndependentWitness {
    VertexSet I;
    EdgeSet complement_induced;  // edge ids of g, none of them in x
};

bool independent_witness_is_valid(const Multigraph& g, const EdgeSet& x,
                                  const IndependentWitness& w);

/// Maximum independent set route: a witness when the maximum independent set
/// of g - x exceeds |V|/2, nullopt otherwise. Requires n <= cap.
std::optional<IndependentWitness> independent_witness_exact(const Multigraph& g,
                                                            const EdgeSet& x, int cap = 24);

/// The matching-preclusion trichotomy for (g, x). NoCertificate carries the
/// Tutte barrier of g - x and only arises outside the theorem's hypotheses.
struct NoCertificateEvidence {
    Barrier barrier;
};

struct PreclusionVerdict {
    enum class Kind { HasMatching, LMIsolated, LargeIndependent, NoCertificate };

    std::variant<Matching, LMCertificate, IndependentWitness, NoCertificateEvidence> payload;
    std::vector<std::string> warnings;

    Kind kind() const { return static_cast<Kind>(payload.index()); }
    const Matching& matching() const { return std::get<Matching>(payload); }
    const LMCertificate& lm_certificate() const { return std::get<LMCertificate>(payload); }
    const IndependentWitness& witness() const { return std::get<IndependentWitness>(payload); }
    const Barrier& barrier() const { return std::get<NoCertificateEvidence>(payload).barrier; }
};

/// Decides perfect-matching existence in g - x and, on failure, produces a
/// certificate: an LM run ending in an isolated vertex, or a large
/// independent set (from the barrier when all components of (g-x)-S are
/// singletons, else by exact search).
PreclusionVerdict classify(const Multigraph& g, const EdgeSet& x, int d, int k,
                           int independent_set_cap = 24);

/// Moreover-clause of the main theorem: the complement of the witness
/// induces at most k-1 edges in g - x. Throws on an invalid witness.
bool verify_moreover_bound(const Multigraph& g, const EdgeSet& x, const IndependentWitness& w,
                           int k);

/// Structural verdict for |X| = d in a d-regular graph: (a) all X-edges at a
/// common vertex, or (b) g - X bipartite with every X-endpoint in one class
/// (per-component side flips are searched), else HasMatching.
struct Theorem3Verdict {
    enum class Kind { HasMatching, CommonVertex, BipartiteSamePartition };

    Kind kind = Kind::HasMatching;
    int common_vertex = -1;                 // CommonVertex
    std::optional<Partition> partition;     // BipartiteSamePartition; X inside side1
    std::vector<std::string> warnings;

    bool precludes() const { return kind != Kind::HasMatching; }
};

Theorem3Verdict check_theorem3(const Multigraph& g, const EdgeSet& x, int d);

}  // namespace mf
