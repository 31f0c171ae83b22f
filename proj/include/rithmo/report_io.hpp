#pragma once

// JSON and CSV serialization of report and table types.
//
// Outputs are byte-deterministic for identical inputs: objects use insertion
// order, exact integers and rationals are emitted as decimal strings (so
// arbitrarily large values survive a parse round trip), and decimal columns
// carry their precision in the header.

#include "rithmo/board.hpp"
#include "rithmo/boethius.hpp"
#include "rithmo/fiboquad.hpp"
#include "rithmo/identities.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rithmo {

using Json = nlohmann::ordered_json;

Json to_json(const VerificationRecord& record);
Json to_json(const SweepReport& report);
Json to_json(const RatioClass& rc);
Json to_json(const ClassificationResult& result);
Json to_json(const Progression& progression);
Json to_json(const std::vector<Progression>& progressions);
Json to_json(const ConvergenceReport& report);
Json to_json(const BoardTable& table);
Json to_json(const ExtendedTable& table);

std::string to_csv(const SweepReport& report);
std::string to_csv(const std::vector<Progression>& progressions);
std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const BoardTable& table);
std::string to_csv(const ExtendedTable& table);

/// RFC-4180-style field escaping (quotes a field only when needed).
std::string csv_field(const std::string& value);

}  // namespace rithmo
