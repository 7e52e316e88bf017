#pragma once

#include <string>

#include "json.hpp"
#include "qhtop/rank.hpp"
#include "qhtop/theorems.hpp"
#include "qhtop/verify.hpp"

namespace qhtop {

using json = nlohmann::json;

json to_json(const RadialSymbol& s);
json to_json(const GammaRatioTransform& g);
json to_json(const MellinTransform& t);
json to_json(const CanonicalTerm& t);
json to_json(const RankReport& r);
json to_json(const TheoremVerdict& v);
json to_json(const CellRecord& r);
json to_json(const SweepSummary& s);

/// Versioned envelope around a command's inputs and outputs. Everything but
/// the timestamp is a pure function of the inputs.
json make_envelope(const std::string& command, json inputs, json outputs,
                   bool passed, json tolerances = json::object(),
                   json window = json::object());

std::string csv_from_records(const std::vector<CellRecord>& records);

}  // namespace qhtop
