#pragma once

#include <variant>

#include <json.hpp>

#include "quasinet/behavior.hpp"
#include "quasinet/certify.hpp"
#include "quasinet/network.hpp"
#include "quasinet/qdist.hpp"
#include "quasinet/qproc.hpp"

namespace quasinet {

using Json = nlohmann::json;

// Every rational travels as a "num/den" string. Parsers throw Error on any
// schema violation.

/// {"variables": [...], "weights": ["num/den", ...]} indexed by assignment.
Json to_json(const QuasiDistribution& q);
QuasiDistribution distribution_from_json(const Json& j);

/// {"variables": [...], "coeffs": {"a0.b1": "num/den", "": "1/1", ...}};
/// absent subsets are simply missing keys.
Json to_json(const CorrelatorTable& t);
CorrelatorTable correlators_from_json(const Json& j);

/// {"in_variables": [...], "out_variables": [...], "kernel": [...]} with the
/// kernel column-major over input assignments.
Json to_json(const QuasiStochasticProcess& s);
QuasiStochasticProcess process_from_json(const Json& j);

/// {"settings": [X, Y, Z], "allow_negative": bool,
///  "table": {"x,y,z": {"a,b,c": "num/den"}}} with outcomes written "+1"/"-1".
Json to_json(const Behavior& b);
Behavior behavior_from_json(const Json& j);

Json to_json(const BilocalReport& r);
Json to_json(const LocalityCertificate& c, const Dims& dims);
Json to_json(const NegativityCertificate& c);

/// Scenario documents take one of three shapes:
///   {"params": {"eta": .., "mu1": .., "mu2": ..}}
///   {"sources": [q_AB, q_BC], "processor": S}
///   {"sources": [q_0, ..., q_{N-1}], "processors": [S_1, ..., S_{N-1}]}
using Scenario = std::variant<BilocalParams, BilocalScenario, ChainNetwork>;
Scenario scenario_from_json(const Json& j);

}  // namespace quasinet
