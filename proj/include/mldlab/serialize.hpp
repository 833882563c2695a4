#pragma once

#include "mldlab/stability.hpp"

#include <json.hpp>

namespace mldlab {

using Json = nlohmann::ordered_json;

/// Bumped whenever a document layout changes.
inline constexpr int kSchemaVersion = 1;

Json to_json(const IdealSystem& system);
/// Accepts {"factors": [{"generators": [...] or "(g1, g2)", "exponent": "p/q"}]}.
IdealSystem system_from_json(const Json& doc);

Json to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& doc);

Json to_json(const MldReport& report, const ResolutionGraph& graph);
/// The graph with its blow-up log and per-divisor discrepancy table.
Json to_json(const ResolutionGraph& graph);
/// Re-runs the blow-up log of a serialised graph on its system.
ResolutionGraph replay(const Json& doc);
Json discrepancy_table(const ResolutionGraph& graph);

Json to_json(const StabilityCertificate& cert);
Json to_json(const VerificationReport& report);
Json to_json(const MinLevelReport& report);

} // namespace mldlab
