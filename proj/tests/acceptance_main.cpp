// Acceptance suite: one line per criterion, exit code 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mf/campaign.hpp"
#include "mf/connectivity.hpp"
#include "mf/graph6.hpp"
#include "mf/jsonio.hpp"
#include "mf/lm.hpp"
#include "mf/matching.hpp"
#include "mf/preclusion.hpp"
#include "mf/signed_graph.hpp"
#include "mf/twofactor.hpp"
#include "mf/zoo.hpp"
#include "testutil.hpp"

using namespace mf;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok, double ms, const std::string& detail) {
    std::printf("%s  criterion %d: %s  [%.0f ms]%s%s\n", ok ? "PASS" : "FAIL", criterion,
                title, ms, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

template <typename Fn>
void run(int criterion, const char* title, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    report(criterion, title, ok, ms, detail);
}

CampaignReport campaign(TheoremId id, const std::string& file, int max_n, int k = 1,
                        int max_x = 3) {
    CampaignConfig cfg;
    cfg.theorem = id;
    if (!file.empty()) cfg.input_files = {testutil::data_path(file)};
    cfg.caps.max_n = max_n;
    cfg.caps.max_x_size = max_x;
    cfg.k = k;
    return run_campaign(cfg);
}

std::string summary(const CampaignReport& rep) {
    std::ostringstream s;
    s << rep.graphs_meeting_hypotheses << " qualifying graphs, " << rep.total_instances
      << " instances, " << rep.total_violations << " violations";
    return s.str();
}

}  // namespace

int main() {
    run(1, "every 2-edge set of the Petersen graph is avoidable", [](std::string& detail) {
        Multigraph pet = zoo::petersen();
        long checked = 0;
        for (int e = 0; e < 15; ++e)
            for (int f = e + 1; f < 15; ++f) {
                auto m = perfect_matching_avoiding(pet, {e, f});
                if (!m || !is_perfect_matching(pet, *m) ||
                    !set_intersection(m->edges, {e, f}).empty())
                    return false;
                ++checked;
            }
        detail = std::to_string(checked) + " edge pairs";
        return checked == 105;
    });

    run(2, "structural classifier matches the matching verdict, |X| = 3",
        [](std::string& detail) {
            CampaignReport rep = campaign(TheoremId::T3, "cubic_le14.g6", 14);
            detail = summary(rep);
            return rep.ok() && rep.graphs_meeting_hypotheses >= 20 &&
                   rep.total_instances >= 10000;
        });

    run(3, "main equivalence with one and two extra deleted edges",
        [](std::string& detail) {
            CampaignReport rep1 = campaign(TheoremId::T2, "cubic_le14.g6", 14, 1);
            CampaignReport rep2 = campaign(TheoremId::T2, "cubic_le14.g6", 14, 2);
            long lemcor2 = 0;
            for (const GraphRecord& r : rep1.records)
                for (const auto& f : r.findings)
                    if (f.value("kind", "") == "lemcor2-instance") ++lemcor2;
            detail = "k=1: " + summary(rep1) + "; k=2: " + summary(rep2) + "; " +
                     std::to_string(lemcor2) + " qualifying LM certificates";
            return rep1.ok() && rep2.ok() && rep1.graphs_meeting_hypotheses >= 20 &&
                   rep2.graphs_meeting_hypotheses >= 2 && lemcor2 >= 1;
        });

    run(4, "two-path counterexample reproduces", [](std::string& detail) {
        Counterexample c = build_counterexample(default_construction_params());
        bool ok = c.graph.vertex_count() == 44 && c.graph.is_cubic();
        ok = ok && c.witness1.size() == 23 && c.witness2.size() == 23 &&
             2 * 23 > c.graph.vertex_count();
        for (auto [p, w] : {std::pair{&c.p1, &c.witness1}, std::pair{&c.p2, &c.witness2}}) {
            EdgeSet px = p->edge_set();
            for (int e = 0; e < c.graph.edge_count() && ok; ++e) {
                if (set_contains(px, e)) continue;
                auto [u, v] = c.graph.endpoints(e);
                if (set_contains(*w, u) && set_contains(*w, v)) ok = false;
            }
        }
        ok = ok && !extends_to_two_factor(c.graph, c.p1).has_value();
        ok = ok && !extends_to_two_factor(c.graph, c.p2).has_value();
        detail = "44 vertices, witnesses 23 > 22, neither path extends";
        return ok;
    });

    run(5, "Coxeter graph: cyclic connectivity 7, no 7-circuit forced through any vertex",
        [](std::string& detail) {
            Multigraph cox = zoo::coxeter();
            CyclicConnectivityReport flow = cyclic_edge_connectivity(cox);
            CyclicConnectivityReport brute = cyclic_edge_connectivity_brute(cox);
            if (!flow.value || *flow.value != 7) return false;
            if (!brute.value || *brute.value != 7) return false;
            int done = 0;
            for (int v = 0; v < cox.vertex_count(); ++v) {
                TwoFactor tf = verify_vertex_seven_circuit(cox, v);
                if (!is_two_factor(cox, tf)) return false;
                if (circuit_length_through(cox, tf, v) == 7) return false;
                ++done;
            }
            detail = "cut enumeration agrees; " + std::to_string(done) + "/28 vertices";
            return done == 28;
        });

    run(6, "two 3-paths fail together exactly in the shared-edge position",
        [](std::string& detail) {
            CampaignReport rep = campaign(TheoremId::T5, "cyclic5_le20.g6", 20);
            Multigraph pet = zoo::petersen();
            // Petersen specifically: every 3-path extends.
            long petersen_paths = 0;
            std::function<bool(std::vector<int>&)> grow = [&](std::vector<int>& vs) -> bool {
                if (vs.size() == 4) {
                    if (vs.front() > vs.back()) return true;
                    ++petersen_paths;
                    return extends_to_two_factor(pet, PathSpec::from_vertices(pet, vs))
                        .has_value();
                }
                for (const auto& a : pet.adj(vs.back())) {
                    if (std::find(vs.begin(), vs.end(), a.to) != vs.end()) continue;
                    vs.push_back(a.to);
                    bool ok = grow(vs);
                    vs.pop_back();
                    if (!ok) return false;
                }
                return true;
            };
            bool all_extend = true;
            for (int v = 0; v < pet.vertex_count() && all_extend; ++v) {
                std::vector<int> vs{v};
                all_extend = grow(vs);
            }
            detail = summary(rep) + "; " + std::to_string(petersen_paths) +
                     " Petersen 3-paths all extend";
            return rep.ok() && rep.graphs_meeting_hypotheses >= 4 && all_extend &&
                   petersen_paths == 60;
        });

    run(7, "oracle suites", [](std::string& detail) {
        std::ostringstream parts;

        // (i) Berge-Tutte identity over the catalogue (all graphs are <= 16)
        long bt = 0;
        for (const auto& e : read_catalogue_file(testutil::data_path("cubic_le14.g6"))) {
            Barrier b = max_deficiency_barrier(e.graph);
            if (e.graph.vertex_count() - 2 * maximum_matching(e.graph).size() !=
                    b.deficiency ||
                !barrier_is_consistent(e.graph, b))
                return false;
            ++bt;
        }
        parts << "(i) " << bt << " barrier identities";

        // (ii) greedy vs exhaustive LM over all deletions up to 3 edges
        CampaignReport lm = campaign(TheoremId::LMAgreement, "cubic_le14.g6", 14, 1, 3);
        if (!lm.ok()) return false;
        parts << "; (ii) " << lm.total_instances << " LM agreements";

        // (iii) switching equivalence against 2^n enumeration
        std::mt19937 rng(424242);
        long sw = 0;
        for (int trial = 0; trial < 300; ++trial) {
            int n = 6 + static_cast<int>(rng() % 5);
            Multigraph g = testutil::random_gnp(n, 0.4, 5000 + trial);
            auto rand_edges = [&](unsigned s) {
                std::mt19937 r2(s);
                EdgeSet out;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (r2() & 1) out.push_back(e);
                return out;
            };
            SignedGraph s1(g, rand_edges(6000 + trial)), s2(g, rand_edges(7000 + trial));
            bool brute = false;
            for (long mask = 0; mask < (1L << n) && !brute; ++mask) {
                VertexSet w;
                for (int v = 0; v < n; ++v)
                    if (mask & (1L << v)) w.push_back(v);
                brute = set_symmetric_difference(s1.negative, boundary(g, w)) == s2.negative;
            }
            auto got = switching_equivalent(s1, s2);
            if (got.has_value() != brute) return false;
            if (got && set_symmetric_difference(s1.negative, boundary(g, *got)) != s2.negative)
                return false;
            ++sw;
        }
        parts << "; (iii) " << sw << " switching verdicts";

        // (iv) the two-bipartition cut lemma, statements 1 and 2 literally
        long farb = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            Multigraph g = testutil::random_gnp(10, 0.35, 8000 + trial);
            VertexSet p = testutil::random_vertex_subset(g, 9000 + trial);
            VertexSet q = testutil::random_vertex_subset(g, 10000 + trial);
            EdgeSet a, b;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.endpoints(e);
                if (set_contains(p, u) == set_contains(p, v)) a.push_back(e);
                if (set_contains(q, u) == set_contains(q, v)) b.push_back(e);
            }
            auto [part, corr] = cut_from_bipartite_pair(g, a, b);
            if (boundary(g, part.side1) != set_symmetric_difference(a, b)) return false;
            if (corr.v1b != set_symmetric_difference(corr.v1a, part.side1)) return false;
            if (corr.v2b != set_symmetric_difference(corr.v2a, part.side1)) return false;
            if (corr.v1b != set_symmetric_difference(corr.v2a, part.side2)) return false;
            if (corr.v2b != set_symmetric_difference(corr.v1a, part.side2)) return false;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.endpoints(e);
                bool crosses = set_contains(corr.v1b, u) != set_contains(corr.v1b, v);
                if (crosses == set_contains(normalized_set(b), e)) return false;
            }
            ++farb;
        }
        parts << "; (iv) " << farb << " cut-lemma instances";

        // (v) the cut-structure clauses on every qualifying certificate of
        // the k=1 campaign
        CampaignReport t2 = campaign(TheoremId::T2, "cubic_le14.g6", 14, 1);
        if (!t2.ok()) return false;
        long qualifying = 0;
        for (const GraphRecord& r : t2.records)
            for (const auto& f : r.findings)
                if (f.value("kind", "") == "lemcor2-instance") {
                    if (f.value("ok", false) != true) return false;
                    ++qualifying;
                }
        if (qualifying < 1) return false;
        parts << "; (v) " << qualifying << " cut-structure certificates";

        detail = parts.str();
        return true;
    });

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
