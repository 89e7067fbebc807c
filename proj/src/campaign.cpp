#include "mf/campaign.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

#include "mf/connectivity.hpp"
#include "mf/jsonio.hpp"
#include "mf/lm.hpp"
#include "mf/matching.hpp"
#include "mf/preclusion.hpp"
#include "mf/twofactor.hpp"

namespace mf {

std::optional<TheoremId> theorem_from_string(std::string_view s) {
    if (s == "t1") return TheoremId::T1;
    if (s == "t2") return TheoremId::T2;
    if (s == "t3") return TheoremId::T3;
    if (s == "t5") return TheoremId::T5;
    if (s == "lm") return TheoremId::LMAgreement;
    if (s == "cor7") return TheoremId::Cor7;
    if (s == "counterexample") return TheoremId::Counterexample;
    return std::nullopt;
}

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "t1";
        case TheoremId::T2: return "t2";
        case TheoremId::T3: return "t3";
        case TheoremId::T5: return "t5";
        case TheoremId::LMAgreement: return "lm";
        case TheoremId::Cor7: return "cor7";
        case TheoremId::Counterexample: return "counterexample";
    }
    return "?";
}

namespace {

int regular_degree(const Multigraph& g) {
    if (g.vertex_count() == 0) return -1;
    int d = g.degree(0);
    return g.is_regular(d) ? d : -1;
}

long binomial_capped(long m, long r, long cap) {
    if (r < 0 || r > m) return 0;
    long v = 1;
    for (long i = 1; i <= r; ++i) {
        v = v * (m - r + i) / i;
        if (v > cap) return cap + 1;
    }
    return v;
}

// Visits every size-r subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int r, Fn&& fn) {
    if (r < 0 || r > m) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All paths with 3 edges, one PathSpec per path (reversals deduplicated by a
// canonical key including edge ids).
std::vector<PathSpec> all_3paths(const Multigraph& g) {
    std::vector<PathSpec> out;
    std::set<std::vector<int>> seen;
    std::vector<int> vs, es;
    std::function<void(int)> grow = [&](int v) {
        if (vs.size() == 4) {
            std::vector<int> key = es;
            std::vector<int> rkey(es.rbegin(), es.rend());
            if (rkey < key) key = rkey;
            if (seen.insert(key).second) {
                PathSpec p;
                p.vertices = vs;
                p.edges = es;
                out.push_back(p);
            }
            return;
        }
        for (const auto& a : g.adj(v)) {
            if (std::find(vs.begin(), vs.end(), a.to) != vs.end()) continue;
            vs.push_back(a.to);
            es.push_back(a.edge);
            grow(a.to);
            es.pop_back();
            vs.pop_back();
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        vs = {v};
        es.clear();
        grow(v);
    }
    return out;
}

void check_t1(const Multigraph& g, const CampaignCaps& caps, GraphRecord& rec) {
    int d = regular_degree(g);
    rec.hypotheses_met = d >= 1 && g.vertex_count() % 2 == 0 &&
                         edge_connectivity(g) >= d - 1;
    if (!rec.hypotheses_met) return;
    if (binomial_capped(g.edge_count(), d - 1, caps.max_instances_per_graph) >
        caps.max_instances_per_graph) {
        rec.skipped_by_cap = true;
        rec.note = "instance cap exhausted";
        return;
    }
    for_each_subset(g.edge_count(), d - 1, [&](const std::vector<int>& x) {
        ++rec.instances;
        if (!perfect_matching_avoiding(g, x))
            rec.violations.push_back(
                {{"check", "t1"}, {"x", x}, {"reason", "no perfect matching avoiding X"}});
    });
}

void check_t2(const Multigraph& g, const CampaignCaps& caps, int k, GraphRecord& rec) {
    int d = regular_degree(g);
    rec.hypotheses_met = d >= 1 && g.vertex_count() % 2 == 0 &&
                         cyclic_edge_connectivity(g).at_least(d - 1 + 2 * k);
    if (!rec.hypotheses_met) return;
    if (g.vertex_count() > 24) {
        rec.skipped_by_cap = true;
        rec.note = "exact independent-set search capped at 24 vertices";
        return;
    }
    int xsize = d - 1 + k;
    if (binomial_capped(g.edge_count(), xsize, caps.max_instances_per_graph) >
        caps.max_instances_per_graph) {
        rec.skipped_by_cap = true;
        rec.note = "instance cap exhausted";
        return;
    }
    for_each_subset(g.edge_count(), xsize, [&](const std::vector<int>& x) {
        ++rec.instances;
        bool has_pm = perfect_matching_avoiding(g, x).has_value();
        auto lm = lm_reduce_exhaustive(delete_edges(g, x).graph);
        auto wit = independent_witness_exact(g, x, 24);
        bool certified = lm.has_value() || wit.has_value();
        if (has_pm == certified)
            rec.violations.push_back({{"check", "t2-equivalence"},
                                      {"x", x},
                                      {"hasMatching", has_pm},
                                      {"lmCertificate", lm.has_value()},
                                      {"independentWitness", wit.has_value()}});
        if (wit && !verify_moreover_bound(g, x, *wit, k))
            rec.violations.push_back({{"check", "t2-moreover"},
                                      {"x", x},
                                      {"witness", to_json(*wit)},
                                      {"k", k}});
        if (lm) {
            LMValidationReport v = validate_lm_certificate(g, *lm, x, d);
            if (!v.valid)
                rec.violations.push_back({{"check", "lm-invalid"},
                                          {"x", x},
                                          {"certificate", to_json(*lm)},
                                          {"error", v.error}});
            else if (v.lemcor2_applicable) {
                rec.findings.push_back({{"kind", "lemcor2-instance"},
                                        {"x", x},
                                        {"certificate", to_json(*lm)},
                                        {"ok", v.lemcor2_ok}});
                if (!v.lemcor2_ok)
                    rec.violations.push_back({{"check", "lemcor2"},
                                              {"x", x},
                                              {"certificate", to_json(*lm)},
                                              {"violations", v.lemcor2_violations}});
            }
        }
    });
}

void check_t3(const Multigraph& g, const CampaignCaps& caps, GraphRecord& rec) {
    rec.hypotheses_met = g.is_cubic() && cyclic_edge_connectivity(g).at_least(4);
    if (!rec.hypotheses_met) return;
    if (binomial_capped(g.edge_count(), 3, caps.max_instances_per_graph) >
        caps.max_instances_per_graph) {
        rec.skipped_by_cap = true;
        rec.note = "instance cap exhausted";
        return;
    }
    for_each_subset(g.edge_count(), 3, [&](const std::vector<int>& x) {
        ++rec.instances;
        Theorem3Verdict sv = check_theorem3(g, x, 3);
        bool has_pm = perfect_matching_avoiding(g, x).has_value();
        if (sv.precludes() == has_pm)
            rec.violations.push_back({{"check", "t3"},
                                      {"x", x},
                                      {"structural", to_json(sv)},
                                      {"hasMatching", has_pm}});
    });
}

void check_t5(const Multigraph& g, const CampaignCaps& caps, GraphRecord& rec) {
    rec.hypotheses_met = g.is_cubic() && cyclic_edge_connectivity(g).at_least(5);
    if (!rec.hypotheses_met) return;
    std::vector<PathSpec> paths = all_3paths(g);
    long pairs = static_cast<long>(paths.size()) * (static_cast<long>(paths.size()) - 1) / 2;
    if (pairs > caps.max_instances_per_graph) {
        rec.skipped_by_cap = true;
        rec.note = "instance cap exhausted";
        return;
    }
    std::vector<char> ext(paths.size());
    for (size_t i = 0; i < paths.size(); ++i)
        ext[i] = extends_to_two_factor(g, paths[i]).has_value();
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j) {
            ++rec.instances;
            auto wit = detect_position_p1(g, paths[i], paths[j]);
            bool both_stuck = !ext[i] && !ext[j];
            if (both_stuck != wit.has_value())
                rec.violations.push_back({{"check", "t5"},
                                          {"path1", paths[i].vertices},
                                          {"path2", paths[j].vertices},
                                          {"extends1", static_cast<bool>(ext[i])},
                                          {"extends2", static_cast<bool>(ext[j])},
                                          {"positionP1", wit.has_value()}});
        }
}

void check_cor7(const Multigraph& g, const CampaignCaps&, GraphRecord& rec) {
    rec.hypotheses_met = g.is_cubic() && cyclic_edge_connectivity(g).at_least(7);
    if (!rec.hypotheses_met) return;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++rec.instances;
        try {
            TwoFactor tf = verify_vertex_seven_circuit(g, v);
            if (!is_two_factor(g, tf) || circuit_length_through(g, tf, v) == 7)
                rec.violations.push_back(
                    {{"check", "cor7"}, {"v", v}, {"twoFactor", to_json(tf)}});
        } catch (const std::exception& e) {
            rec.violations.push_back({{"check", "cor7"}, {"v", v}, {"error", e.what()}});
        }
    }
}

void check_lm_agreement(const Multigraph& g, const CampaignCaps& caps, GraphRecord& rec) {
    rec.hypotheses_met = true;
    int d = regular_degree(g);
    long total = 0;
    int max_r = std::min(caps.max_x_size, g.edge_count());
    for (int r = 0; r <= max_r; ++r)
        total += binomial_capped(g.edge_count(), r, caps.max_instances_per_graph);
    if (total > caps.max_instances_per_graph) {
        rec.skipped_by_cap = true;
        rec.note = "instance cap exhausted";
        return;
    }
    for (int r = 0; r <= max_r; ++r) {
        for_each_subset(g.edge_count(), r, [&](const std::vector<int>& x) {
            ++rec.instances;
            const Multigraph gx = delete_edges(g, x).graph;
            auto greedy = lm_reduce_greedy(gx);
            auto exhaustive = lm_reduce_exhaustive(gx);
            if (greedy.has_value() != exhaustive.has_value()) {
                rec.violations.push_back({{"check", "lm-divergence"},
                                          {"x", x},
                                          {"greedy", greedy.has_value()},
                                          {"exhaustive", exhaustive.has_value()}});
                return;
            }
            for (const auto* cert : {greedy ? &*greedy : nullptr,
                                     exhaustive ? &*exhaustive : nullptr}) {
                if (!cert) continue;
                LMValidationReport v = validate_lm_certificate(g, *cert, x, d);
                if (!v.valid)
                    rec.violations.push_back({{"check", "lm-invalid"},
                                              {"x", x},
                                              {"certificate", to_json(*cert)},
                                              {"error", v.error}});
            }
        });
    }
}

void check_counterexample(GraphRecord& rec) {
    rec.hypotheses_met = true;
    Counterexample c = build_counterexample(default_construction_params());
    auto add_violation = [&rec](const std::string& what) {
        rec.violations.push_back({{"check", "counterexample"}, {"reason", what}});
    };

    ++rec.instances;
    if (c.graph.vertex_count() != 44 || !c.graph.is_cubic())
        add_violation("construction is not a 44-vertex cubic graph");

    auto check_witness = [&](const PathSpec& p, const VertexSet& w, const char* name) {
        ++rec.instances;
        if (2 * static_cast<int>(w.size()) <= c.graph.vertex_count())
            add_violation(std::string(name) + " is not larger than half the vertices");
        EdgeSet px = p.edge_set();
        for (int e = 0; e < c.graph.edge_count(); ++e) {
            if (set_contains(px, e)) continue;
            auto [u, v] = c.graph.endpoints(e);
            if (set_contains(w, u) && set_contains(w, v)) {
                add_violation(std::string(name) + " is not independent in G - E(P)");
                break;
            }
        }
        ++rec.instances;
        if (extends_to_two_factor(c.graph, p))
            add_violation(std::string(name) + ": the path extends to a 2-factor");
    };
    check_witness(c.p1, c.witness1, "witness1");
    check_witness(c.p2, c.witness2, "witness2");
}

}  // namespace

GraphRecord run_graph_checks(TheoremId theorem, const Multigraph& g, const CampaignCaps& caps,
                             int k) {
    GraphRecord rec;
    if (g.vertex_count() > caps.max_n) {
        rec.skipped_by_cap = true;
        rec.note = "graph exceeds --max-n";
        return rec;
    }
    switch (theorem) {
        case TheoremId::T1: check_t1(g, caps, rec); break;
        case TheoremId::T2: check_t2(g, caps, k, rec); break;
        case TheoremId::T3: check_t3(g, caps, rec); break;
        case TheoremId::T5: check_t5(g, caps, rec); break;
        case TheoremId::Cor7: check_cor7(g, caps, rec); break;
        case TheoremId::LMAgreement: check_lm_agreement(g, caps, rec); break;
        case TheoremId::Counterexample: check_counterexample(rec); break;
    }
    return rec;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    CampaignReport rep;
    rep.theorem = cfg.theorem;

    std::vector<CatalogueEntry> entries;
    if (cfg.theorem == TheoremId::Counterexample) {
        // Self-contained: the construction is built, not ingested.
        GraphRecord rec;
        auto t0 = std::chrono::steady_clock::now();
        try {
            check_counterexample(rec);
        } catch (const std::exception& e) {
            rec.violations.push_back({{"check", "error"}, {"what", e.what()}});
        }
        rec.source = "construction";
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rep.records.push_back(std::move(rec));
    } else {
        for (const std::string& path : cfg.input_files) {
            auto part = read_catalogue_file(path);
            for (auto& e : part) {
                e.text = path + ":" + std::to_string(e.line);
                entries.push_back(std::move(e));
            }
        }
        rep.records.resize(entries.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= entries.size()) break;
                auto t0 = std::chrono::steady_clock::now();
                GraphRecord rec;
                try {
                    rec = run_graph_checks(cfg.theorem, entries[i].graph, cfg.caps, cfg.k);
                } catch (const std::exception& e) {
                    rec.violations.push_back({{"check", "error"}, {"what", e.what()}});
                }
                rec.index = static_cast<int>(i);
                rec.source = entries[i].text;
                rec.line = entries[i].line;
                rec.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                rep.records[i] = std::move(rec);
            }
        };
        int jobs = std::max(1, cfg.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    for (const GraphRecord& r : rep.records) {
        rep.total_instances += r.instances;
        rep.total_violations += static_cast<long>(r.violations.size());
        if (r.hypotheses_met) ++rep.graphs_meeting_hypotheses;
    }
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path);
        if (!out) throw std::runtime_error("cannot write " + cfg.output_path);
        write_report_jsonl(rep, out);
    }
    return rep;
}

bool replay_violation(const Multigraph& g, const nlohmann::json& violation, int k) {
    const std::string check = violation.value("check", "");
    auto get_x = [&violation]() { return violation.at("x").get<EdgeSet>(); };
    if (check == "t1") return !perfect_matching_avoiding(g, get_x());
    if (check == "t2-equivalence") {
        EdgeSet x = get_x();
        bool has_pm = perfect_matching_avoiding(g, x).has_value();
        bool certified = lm_reduce_exhaustive(delete_edges(g, x).graph).has_value() ||
                         independent_witness_exact(g, x, 24).has_value();
        return has_pm == certified;
    }
    if (check == "t2-moreover") {
        EdgeSet x = get_x();
        auto wit = independent_witness_exact(g, x, 24);
        return wit && !verify_moreover_bound(g, x, *wit, k);
    }
    if (check == "t3") {
        EdgeSet x = get_x();
        return check_theorem3(g, x, 3).precludes() ==
               perfect_matching_avoiding(g, x).has_value();
    }
    if (check == "t5") {
        PathSpec p = PathSpec::from_vertices(g, violation.at("path1").get<std::vector<int>>());
        PathSpec q = PathSpec::from_vertices(g, violation.at("path2").get<std::vector<int>>());
        bool both_stuck = !extends_to_two_factor(g, p) && !extends_to_two_factor(g, q);
        return both_stuck != detect_position_p1(g, p, q).has_value();
    }
    if (check == "cor7") {
        int v = violation.at("v");
        try {
            TwoFactor tf = verify_vertex_seven_circuit(g, v);
            return !is_two_factor(g, tf) || circuit_length_through(g, tf, v) == 7;
        } catch (const std::exception&) {
            return true;
        }
    }
    if (check == "lm-divergence") {
        const Multigraph gx = delete_edges(g, get_x()).graph;
        return lm_reduce_greedy(gx).has_value() != lm_reduce_exhaustive(gx).has_value();
    }
    if (check == "lm-invalid") {
        LMCertificate cert = lm_certificate_from_json(violation.at("certificate"));
        return !validate_lm_certificate(g, cert, get_x(), regular_degree(g)).valid;
    }
    if (check == "lemcor2") {
        LMCertificate cert = lm_certificate_from_json(violation.at("certificate"));
        LMValidationReport v = validate_lm_certificate(g, cert, get_x(), regular_degree(g));
        return v.valid && v.lemcor2_applicable && !v.lemcor2_ok;
    }
    return false;
}

void write_report_jsonl(const CampaignReport& rep, std::ostream& out) {
    for (const GraphRecord& r : rep.records) {
        nlohmann::json j{{"index", r.index},
                         {"source", r.source},
                         {"hypothesesMet", r.hypotheses_met},
                         {"instances", r.instances},
                         {"violations", r.violations},
                         {"wallMs", r.wall_ms}};
        if (r.skipped_by_cap) j["skippedByCap"] = true;
        if (!r.note.empty()) j["note"] = r.note;
        if (!r.findings.empty()) j["findings"] = r.findings;
        out << j.dump() << "\n";
    }
    nlohmann::json summary{{"summary",
                            {{"theorem", to_string(rep.theorem)},
                             {"graphs", rep.records.size()},
                             {"graphsMeetingHypotheses", rep.graphs_meeting_hypotheses},
                             {"instances", rep.total_instances},
                             {"violations", rep.total_violations}}}};
    out << summary.dump() << "\n";
}

std::vector<CatalogueEntry> filter_catalogue(const std::string& path,
                                             const CataloguePredicate& pred,
                                             FilterSummary* summary) {
    std::vector<CatalogueEntry> entries = read_catalogue_file(path);
    std::vector<CatalogueEntry> out;
    FilterSummary s;
    s.parsed = static_cast<long>(entries.size());
    for (auto& e : entries) {
        const Multigraph& g = e.graph;
        if (pred.regular_d && !g.is_regular(*pred.regular_d)) continue;
        if (pred.even_order && g.vertex_count() % 2 != 0) continue;
        if (pred.cyclic_at_least &&
            !cyclic_edge_connectivity(g).at_least(*pred.cyclic_at_least))
            continue;
        out.push_back(std::move(e));
    }
    s.passed = static_cast<long>(out.size());
    if (summary) *summary = s;
    return out;
}

}  // namespace mf
