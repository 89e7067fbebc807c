#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mf/campaign.hpp"
#include "mf/connectivity.hpp"
#include "mf/graph6.hpp"
#include "mf/jsonio.hpp"
#include "mf/preclusion.hpp"
#include "mf/twofactor.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

mf::Multigraph load_graph(const std::string& path, int index) {
    auto entries = mf::read_catalogue_file(path);
    if (entries.empty()) throw std::runtime_error(path + ": no graphs");
    if (index < 0 || index >= static_cast<int>(entries.size()))
        throw std::runtime_error(path + ": graph index out of range");
    return entries[index].graph;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect matchings avoiding edge sets and 2-factors of cubic graphs"};
    app.require_subcommand(1);

    // verify <theorem> [files...]
    std::string theorem_name;
    std::vector<std::string> files;
    int max_n = 20, max_x = 3, jobs = 1, k = 1;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "run a theorem-equivalence campaign");
    verify->add_option("theorem", theorem_name, "t1|t2|t3|t5|lm|cor7|counterexample")
        ->required();
    verify->add_option("files", files, "catalogue files (graph6/sparse6 lines)");
    verify->add_option("--max-n", max_n, "skip graphs with more vertices");
    verify->add_option("--max-x", max_x, "largest |X| for the lm campaign");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--k", k, "extra deleted edges (t2)");
    verify->add_option("--out", out_path, "JSON-lines report path");

    // cyclic-connectivity <file>
    std::string cc_file;
    int cc_index = 0;
    bool cc_brute = false;
    auto* cc = app.add_subcommand("cyclic-connectivity",
                                  "cycle-separating edge connectivity of a graph");
    cc->add_option("file", cc_file)->required();
    cc->add_option("--index", cc_index, "graph index within the file");
    cc->add_flag("--brute-check", cc_brute, "cross-check by subset enumeration (n <= 32)");

    // classify <file> --x ...
    std::string cls_file;
    std::vector<std::string> cls_x;
    int cls_index = 0, cls_d = 3, cls_k = 1;
    auto* cls = app.add_subcommand("classify", "matching-preclusion verdicts for (G, X)");
    cls->add_option("file", cls_file)->required();
    cls->add_option("--x", cls_x, "comma-separated edge ids (repeatable)")->required();
    cls->add_option("--index", cls_index, "graph index within the file");
    cls->add_option("--d", cls_d, "regularity degree");
    cls->add_option("--k", cls_k, "extra deleted edges");

    // extend-path <file> --path ...
    std::string ext_file, ext_path;
    int ext_index = 0;
    auto* ext = app.add_subcommand("extend-path", "2-factor through a path, if one exists");
    ext->add_option("file", ext_file)->required();
    ext->add_option("--path", ext_path, "comma-separated vertex list")->required();
    ext->add_option("--index", ext_index, "graph index within the file");

    // filter <file>
    std::string flt_file;
    int flt_d = -1, flt_cyclic = -1;
    bool flt_even = false;
    auto* flt = app.add_subcommand("filter", "filter a catalogue by computed hypotheses");
    flt->add_option("file", flt_file)->required();
    flt->add_option("--regular", flt_d, "require d-regularity");
    flt->add_flag("--even", flt_even, "require even order");
    flt->add_option("--cyclic", flt_cyclic, "require cyclic edge connectivity >= h");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto id = mf::theorem_from_string(theorem_name);
            if (!id) {
                std::cerr << "unknown theorem: " << theorem_name << "\n";
                return 2;
            }
            if (files.empty() && *id != mf::TheoremId::Counterexample) {
                std::cerr << "verify " << theorem_name << " needs catalogue files\n";
                return 2;
            }
            mf::CampaignConfig cfg;
            cfg.theorem = *id;
            cfg.input_files = files;
            cfg.caps.max_n = max_n;
            cfg.caps.max_x_size = max_x;
            cfg.k = k;
            cfg.jobs = jobs;
            cfg.output_path = out_path;
            mf::CampaignReport rep = mf::run_campaign(cfg);
            if (out_path.empty()) mf::write_report_jsonl(rep, std::cout);
            std::cerr << "graphs=" << rep.records.size()
                      << " hypotheses-met=" << rep.graphs_meeting_hypotheses
                      << " instances=" << rep.total_instances
                      << " violations=" << rep.total_violations << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (*cc) {
            mf::Multigraph g = load_graph(cc_file, cc_index);
            auto rep = mf::cyclic_edge_connectivity(g);
            nlohmann::json j = mf::to_json(rep);
            if (cc_brute) {
                auto brute = mf::cyclic_edge_connectivity_brute(g);
                j["bruteValue"] = brute.value ? nlohmann::json(*brute.value)
                                              : nlohmann::json("infinity");
                j["agree"] = brute.value == rep.value;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cls) {
            mf::Multigraph g = load_graph(cls_file, cls_index);
            // one JSON-lines record per X
            for (const std::string& spec : cls_x) {
                mf::EdgeSet x = mf::normalized_set(parse_int_list(spec));
                auto verdict = mf::classify(g, x, cls_d, cls_k);
                nlohmann::json j = mf::to_json(verdict);
                j["x"] = x;
                std::cout << j.dump() << "\n";
            }
            return 0;
        }
        if (*ext) {
            mf::Multigraph g = load_graph(ext_file, ext_index);
            mf::PathSpec p = mf::PathSpec::from_vertices(g, parse_int_list(ext_path));
            auto tf = mf::extends_to_two_factor(g, p);
            nlohmann::json j;
            j["extends"] = tf.has_value();
            if (tf) j["twoFactor"] = mf::to_json(*tf);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*flt) {
            mf::CataloguePredicate pred;
            if (flt_d >= 0) pred.regular_d = flt_d;
            pred.even_order = flt_even;
            if (flt_cyclic >= 0) pred.cyclic_at_least = flt_cyclic;
            mf::FilterSummary summary;
            auto passed = mf::filter_catalogue(flt_file, pred, &summary);
            for (const auto& e : passed) {
                const auto& g = e.graph;
                std::cout << (g.has_parallel_edges() ? mf::emit_sparse6(g)
                                                     : mf::emit_graph6(g))
                          << "\n";
            }
            std::cerr << "parsed=" << summary.parsed << " passed=" << summary.passed << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
