#pragma once

#include <nlohmann/json.hpp>

#include "mf/connectivity.hpp"
#include "mf/graph.hpp"
#include "mf/lm.hpp"
#include "mf/matching.hpp"
#include "mf/preclusion.hpp"
#include "mf/signed_graph.hpp"
#include "mf/twofactor.hpp"

namespace mf {

using nlohmann::json;

json to_json(const Matching& m);
json to_json(const Partition& p);
json to_json(const Barrier& b);
json to_json(const LMCertificate& c);
LMCertificate lm_certificate_from_json(const json& j);
json to_json(const IndependentWitness& w);
json to_json(const PreclusionVerdict& v);
json to_json(const Theorem3Verdict& v);
json to_json(const CyclicConnectivityReport& r);
json to_json(const SignedGraph& sg);
json to_json(const TwoFactor& tf);
json to_json(const PathWitness& w);

}  // namespace mf
