#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mf/graph.hpp"
#include "mf/graph6.hpp"

namespace mf {

enum class TheoremId { T1, T2, T3, T5, LMAgreement, Cor7, Counterexample };

std::optional<TheoremId> theorem_from_string(std::string_view s);
const char* to_string(TheoremId id);

struct CampaignCaps {
    int max_n = 20;
    int max_x_size = 3;                     // LM-agreement campaign only
    long max_instances_per_graph = 2000000;
};

struct CampaignConfig {
    TheoremId theorem = TheoremId::T1;
    std::vector<std::string> input_files;
    CampaignCaps caps;
    int k = 1;      // extra deleted edges (T2)
    int jobs = 1;
    std::string output_path;  // empty: stdout only handled by the caller
};

/// Per-graph outcome. A violation is a replayable counter-certificate; a
/// finding is informational (e.g. a qualifying LM certificate).
struct GraphRecord {
    int index = 0;
    std::string source;
    int line = 0;
    bool hypotheses_met = false;
    bool skipped_by_cap = false;
    long instances = 0;
    std::vector<nlohmann::json> violations;
    std::vector<nlohmann::json> findings;
    std::string note;
    double wall_ms = 0.0;
};

struct CampaignReport {
    TheoremId theorem = TheoremId::T1;
    std::vector<GraphRecord> records;
    long total_instances = 0;
    long total_violations = 0;
    long graphs_meeting_hypotheses = 0;

    bool ok() const { return total_violations == 0; }
};

/// Runs one theorem-equivalence campaign over the configured catalogue
/// files. Hypotheses are recomputed per graph and never trusted; records
/// keep the input order regardless of the worker count.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// Runs the checks of one theorem on one graph (the unit the campaign
/// shards). Exposed for replaying.
GraphRecord run_graph_checks(TheoremId theorem, const Multigraph& g, const CampaignCaps& caps,
                             int k);

/// Re-runs the two sides of a recorded violation through the core modules;
/// true when the disagreement reproduces. The record's "check" tag selects
/// the replay.
bool replay_violation(const Multigraph& g, const nlohmann::json& violation, int k = 1);

void write_report_jsonl(const CampaignReport& rep, std::ostream& out);

/// Catalogue filter: graphs passing the predicate, in input order.
struct CataloguePredicate {
    std::optional<int> regular_d;
    bool even_order = false;
    std::optional<int> cyclic_at_least;  // infinite convention counts as passing
};

struct FilterSummary {
    long parsed = 0;
    long passed = 0;
};

std::vector<CatalogueEntry> filter_catalogue(const std::string& path,
                                             const CataloguePredicate& pred,
                                             FilterSummary* summary = nullptr);

}  // namespace mf
