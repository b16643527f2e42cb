#pragma once

#include <json.hpp>

#include "epiword/deciders.hpp"
#include "epiword/generators.hpp"
#include "epiword/oracle.hpp"

namespace epiword {

using json = nlohmann::ordered_json;

/// {accepted, reason, certificate: {reduction_letters, base_word,
/// embedding_directive, occurrence_index, witness_u}}; rejections add
/// bad_factor when one was found.
json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

/// Wall time is left out so that identical sweeps serialise identically.
json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const json& j);

/// {"mu": "ab", "excluded_letter": "c", "inner_directive": "*ab", "p": 2,
///  "suffix_index": 3}
json to_json(const EpiskewSpec& e);
EpiskewSpec episkew_spec_from_json(const json& j);

/// {"alpha": "1/3", "rho": "1/3", "variant": "floor" | "ceiling"}
json to_json(const MechanicalSpec& m);
MechanicalSpec mechanical_spec_from_json(const json& j);

}  // namespace epiword
