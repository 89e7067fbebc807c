#pragma once

#include <optional>
#include <string>

#include "mf/graph.hpp"

namespace mf {

/// One leaf matching operation: remove a degree-1 vertex together with its
/// unique neighbour.
struct LMStep {
    int leaf;
    int neighbour;

    bool operator==(const LMStep&) const = default;
};

/// A run of LM operations ending with an isolated vertex. cut_profile[t-1]
/// is the boundary size of U_t = {v_1, w_1, ..., v_t, w_t} in the graph the
/// reduction ran on.
struct LMCertificate {
    std::vector<LMStep> steps;
    int isolated = -1;
    std::vector<int> cut_profile;
};

/// Repeatedly applies an LM operation at the lowest-id degree-1 vertex and
/// stops the first time an isolated vertex appears (reporting the lowest-id
/// one). nullopt when the process stalls with no isolated vertex.
std::optional<LMCertificate> lm_reduce_greedy(const Multigraph& g);

/// Searches all LM-operation orders, memoized on the residual vertex set;
/// succeeds iff some order creates an isolated vertex. n <= 64.
std::optional<LMCertificate> lm_reduce_exhaustive(const Multigraph& g);

struct LMValidationReport {
    bool valid = false;
    int failed_step = -1;  // 0-based step that broke the replay, or -1
    std::string error;

    // Set when g is d-regular cyclically (d+1)-edge-connected of even order,
    // |X| = d and the certificate has s >= 2 steps.
    bool lemcor2_applicable = false;
    bool lemcor2_ok = false;
    std::vector<std::string> lemcor2_violations;
};

/// Replays a certificate against delete_edges(g, x): per-step degree-1 and
/// unique-neighbour conditions, first-isolation minimality, the stored cut
/// profile, and the final isolated vertex. On qualifying instances the three
/// clauses of the LM cut-structure lemma are additionally checked against g:
/// (i) every edge of x meets {v_1, v_2}, (ii) |bd_g(U_1)| <= 2d-2 and
/// |bd_g(U_t)| <= 2d for t >= 2, (iii) every g-edge at a vertex of V_t lies
/// in x or joins V_t to W_t.
LMValidationReport validate_lm_certificate(const Multigraph& g, const LMCertificate& cert,
                                           const EdgeSet& x, int d);

}  // namespace mf
