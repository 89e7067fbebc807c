#include "mf/jsonio.hpp"

#include "mf/graph6.hpp"

namespace mf {

json to_json(const Matching& m) { return json{{"edges", m.edges}}; }

json to_json(const Partition& p) { return json{{"side1", p.side1}, {"side2", p.side2}}; }

json to_json(const Barrier& b) {
    return json{{"S", b.S}, {"oddComponents", b.odd_components}, {"deficiency", b.deficiency}};
}

json to_json(const LMCertificate& c) {
    json steps = json::array();
    for (const LMStep& s : c.steps) steps.push_back(json::array({s.leaf, s.neighbour}));
    return json{{"steps", steps}, {"isolated", c.isolated}, {"cutProfile", c.cut_profile}};
}

LMCertificate lm_certificate_from_json(const json& j) {
    LMCertificate c;
    for (const auto& s : j.at("steps")) c.steps.push_back({s.at(0), s.at(1)});
    c.isolated = j.at("isolated");
    c.cut_profile = j.at("cutProfile").get<std::vector<int>>();
    return c;
}

json to_json(const IndependentWitness& w) {
    return json{{"I", w.I}, {"complementInducedEdges", w.complement_induced}};
}

json to_json(const PreclusionVerdict& v) {
    json j;
    switch (v.kind()) {
        case PreclusionVerdict::Kind::HasMatching:
            j["verdict"] = "HasMatching";
            j["certificate"] = to_json(v.matching());
            break;
        case PreclusionVerdict::Kind::LMIsolated:
            j["verdict"] = "LMIsolated";
            j["certificate"] = to_json(v.lm_certificate());
            break;
        case PreclusionVerdict::Kind::LargeIndependent:
            j["verdict"] = "LargeIndependent";
            j["certificate"] = to_json(v.witness());
            break;
        case PreclusionVerdict::Kind::NoCertificate:
            j["verdict"] = "NoCertificate";
            j["certificate"] = to_json(v.barrier());
            break;
    }
    if (!v.warnings.empty()) j["warnings"] = v.warnings;
    return j;
}

json to_json(const Theorem3Verdict& v) {
    json j;
    switch (v.kind) {
        case Theorem3Verdict::Kind::HasMatching:
            j["verdict"] = "HasMatching";
            break;
        case Theorem3Verdict::Kind::CommonVertex:
            j["verdict"] = "CommonVertex";
            j["vertex"] = v.common_vertex;
            break;
        case Theorem3Verdict::Kind::BipartiteSamePartition:
            j["verdict"] = "BipartiteSamePartition";
            j["partition"] = to_json(*v.partition);
            break;
    }
    if (!v.warnings.empty()) j["warnings"] = v.warnings;
    return j;
}

json to_json(const CyclicConnectivityReport& r) {
    json j;
    if (r.value) j["value"] = *r.value;
    else j["value"] = "infinity";
    j["witnessCut"] = r.witness_cut ? json(*r.witness_cut) : json(nullptr);
    j["sideWithCycle1"] = r.side_with_cycle1 ? json(*r.side_with_cycle1) : json(nullptr);
    j["sideWithCycle2"] = r.side_with_cycle2 ? json(*r.side_with_cycle2) : json(nullptr);
    return j;
}

json to_json(const SignedGraph& sg) {
    json j;
    j["graph6"] = sg.base.has_parallel_edges() ? emit_sparse6(sg.base) : emit_graph6(sg.base);
    j["negative"] = sg.negative;
    return j;
}

json to_json(const TwoFactor& tf) { return json{{"edges", tf.edges}}; }

json to_json(const PathWitness& w) {
    return json{{"path", w.path.vertices}, {"I", w.I},       {"Y", w.Y},
                {"B", w.path_edges_in_y},  {"C", w.close_edges}, {"D", w.distant_edges}};
}

}  // namespace mf
