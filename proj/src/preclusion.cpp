#include "mf/preclusion.hpp"

#include <cstdint>

namespace mf {

namespace {

struct MisSearch {
    int n;
    std::vector<uint64_t> adj;
    uint64_t prefer_mask;
    uint64_t best = 0;
    int best_size = -1, best_overlap = -1;
    bool have_best = false;

    // Lexicographic order on the sorted id sequences of two equal-size sets:
    // the one containing the lowest differing element is smaller.
    static bool lex_less(uint64_t a, uint64_t b) {
        uint64_t diff = a ^ b;
        if (!diff) return false;
        return a & (diff & -diff);
    }

    void offer(uint64_t chosen) {
        int size = __builtin_popcountll(chosen);
        int overlap = __builtin_popcountll(chosen & prefer_mask);
        if (!have_best || size > best_size ||
            (size == best_size &&
             (overlap > best_overlap ||
              (overlap == best_overlap && lex_less(chosen, best))))) {
            best = chosen;
            best_size = size;
            best_overlap = overlap;
            have_best = true;
        }
    }

    void rec(uint64_t allowed, uint64_t chosen) {
        if (have_best &&
            __builtin_popcountll(chosen) + __builtin_popcountll(allowed) < best_size)
            return;
        // Branch on a vertex of maximum degree within `allowed`; once no
        // edges remain there, everything left joins the set.
        int pick = -1, pick_deg = -1;
        for (uint64_t a = allowed; a;) {
            int v = __builtin_ctzll(a);
            a &= a - 1;
            int d = __builtin_popcountll(adj[v] & allowed);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick < 0 || pick_deg == 0) {
            offer(chosen | allowed);
            return;
        }
        uint64_t bit = 1ull << pick;
        rec(allowed & ~(adj[pick] | bit), chosen | bit);
        rec(allowed & ~bit, chosen);
    }
};

}  // namespace

VertexSet maximum_independent_set(const Multigraph& g, const VertexSet& prefer, int cap) {
    if (g.vertex_count() > cap || g.vertex_count() > 63)
        throw std::invalid_argument("maximum_independent_set: cap exceeded");
    MisSearch s;
    s.n = g.vertex_count();
    s.adj.assign(std::max(s.n, 1), 0);
    for (auto [u, v] : g.edge_pairs()) {
        s.adj[u] |= 1ull << v;
        s.adj[v] |= 1ull << u;
    }
    s.prefer_mask = 0;
    for (int v : prefer) s.prefer_mask |= 1ull << v;
    s.rec(s.n == 0 ? 0 : ((1ull << s.n) - 1), 0);
    VertexSet out;
    for (int v = 0; v < s.n; ++v)
        if (s.best & (1ull << v)) out.push_back(v);
    return out;
}

bool independent_witness_is_valid(const Multigraph& g, const EdgeSet& x_in,
                                  const IndependentWitness& w) {
    EdgeSet x = normalized_set(x_in);
    g.check_vertex_set(w.I);
    if (2 * static_cast<int>(w.I.size()) <= g.vertex_count()) return false;
    EdgeSet induced;
    VertexSet rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(w.I, v)) rest.push_back(v);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(x, e)) continue;
        auto [u, v] = g.endpoints(e);
        bool ui = set_contains(w.I, u), vi = set_contains(w.I, v);
        if (ui && vi) return false;  // not independent in g - x
        if (!ui && !vi) induced.push_back(e);
    }
    return induced == w.complement_induced;
}

std::optional<IndependentWitness> independent_witness_exact(const Multigraph& g,
                                                            const EdgeSet& x_in, int cap) {
    EdgeSet x = normalized_set(x_in);
    EdgeDeletion del = delete_edges(g, x);
    VertexSet best = maximum_independent_set(del.graph, {}, cap);
    if (2 * static_cast<int>(best.size()) <= g.vertex_count()) return std::nullopt;
    IndependentWitness w;
    w.I = best;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (set_contains(x, e)) continue;
        auto [u, v] = g.endpoints(e);
        if (!set_contains(w.I, u) && !set_contains(w.I, v)) w.complement_induced.push_back(e);
    }
    return w;
}

PreclusionVerdict classify(const Multigraph& g, const EdgeSet& x_in, int d, int k,
                           int independent_set_cap) {
    g.check_edge_set(x_in);
    EdgeSet x = normalized_set(x_in);
    PreclusionVerdict verdict;
    if (!g.is_regular(d))
        verdict.warnings.push_back("graph is not " + std::to_string(d) + "-regular");
    if (static_cast<int>(x.size()) != d - 1 + k)
        verdict.warnings.push_back("|X| differs from d-1+k");

    EdgeDeletion del = delete_edges(g, x);
    Matching m = maximum_matching(del.graph);
    if (is_perfect_matching(del.graph, m)) {
        verdict.payload = Matching{del.to_old(m.edges)};
        return verdict;
    }

    if (auto cert = lm_reduce_exhaustive(del.graph)) {
        verdict.payload = std::move(*cert);
        return verdict;
    }

    Barrier barrier = max_deficiency_barrier(del.graph);
    int singleton_count = 0;
    for (const auto& comp : barrier.odd_components)
        if (comp.size() == 1) ++singleton_count;
    bool all_singletons =
        singleton_count == g.vertex_count() - static_cast<int>(barrier.S.size()) &&
        singleton_count == static_cast<int>(barrier.odd_components.size());
    if (all_singletons) {
        IndependentWitness w;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!set_contains(barrier.S, v)) w.I.push_back(v);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (set_contains(x, e)) continue;
            auto [u, v] = g.endpoints(e);
            if (!set_contains(w.I, u) && !set_contains(w.I, v))
                w.complement_induced.push_back(e);
        }
        verdict.payload = std::move(w);
        return verdict;
    }

    if (g.vertex_count() <= independent_set_cap) {
        if (auto w = independent_witness_exact(g, x, independent_set_cap)) {
            verdict.payload = std::move(*w);
            return verdict;
        }
    } else {
        verdict.warnings.push_back("independent-set search skipped: cap exceeded");
    }

    verdict.payload = NoCertificateEvidence{std::move(barrier)};
    return verdict;
}

bool verify_moreover_bound(const Multigraph& g, const EdgeSet& x, const IndependentWitness& w,
                           int k) {
    if (!independent_witness_is_valid(g, x, w))
        throw std::invalid_argument("verify_moreover_bound: invalid witness");
    return static_cast<int>(w.complement_induced.size()) <= k - 1;
}

Theorem3Verdict check_theorem3(const Multigraph& g, const EdgeSet& x_in, int d) {
    g.check_edge_set(x_in);
    EdgeSet x = normalized_set(x_in);
    Theorem3Verdict verdict;
    if (!g.is_regular(d))
        verdict.warnings.push_back("graph is not " + std::to_string(d) + "-regular");
    if (static_cast<int>(x.size()) != d) verdict.warnings.push_back("|X| differs from d");

    // (a) all X-edges share a vertex
    if (!x.empty()) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool all = true;
            for (int e : x)
                if (!g.is_incident(e, v)) {
                    all = false;
                    break;
                }
            if (all) {
                verdict.kind = Theorem3Verdict::Kind::CommonVertex;
                verdict.common_vertex = v;
                return verdict;
            }
        }
    }

    // (b) g - X bipartite with all X-endpoints in one class, over all
    // per-component orientations of the bipartition
    EdgeDeletion del = delete_edges(g, x);
    if (auto bip = bipartition(del.graph)) {
        std::vector<VertexSet> comps = components(del.graph);
        int nc = static_cast<int>(comps.size());
        if (nc > 20)
            throw std::runtime_error("check_theorem3: too many components to orient");
        std::vector<int> comp_of(g.vertex_count(), -1), colour(g.vertex_count(), 0);
        for (int c = 0; c < nc; ++c)
            for (int v : comps[c]) comp_of[v] = c;
        for (int v : bip->side2) colour[v] = 1;

        VertexSet x_ends;
        for (int e : x) {
            auto [u, v] = g.endpoints(e);
            x_ends.push_back(u);
            x_ends.push_back(v);
        }
        x_ends = normalized_set(std::move(x_ends));

        for (long flip = 0; flip < (1L << nc); ++flip) {
            auto side_of = [&](int v) { return colour[v] ^ ((flip >> comp_of[v]) & 1); };
            bool all0 = true, all1 = true;
            for (int v : x_ends) {
                if (side_of(v) != 0) all0 = false;
                if (side_of(v) != 1) all1 = false;
            }
            if (!all0 && !all1) continue;
            int target = all0 ? 0 : 1;
            Partition p;
            for (int v = 0; v < g.vertex_count(); ++v)
                (side_of(v) == target ? p.side1 : p.side2).push_back(v);
            verdict.kind = Theorem3Verdict::Kind::BipartiteSamePartition;
            verdict.partition = std::move(p);
            return verdict;
        }
    }

    verdict.kind = Theorem3Verdict::Kind::HasMatching;
    return verdict;
}

}  // namespace mf
