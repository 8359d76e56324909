#pragma once

// JSON encoding of every result type. Rationals are always strings
// "num/den"; integers are JSON numbers when they fit in int64 and decimal
// strings otherwise, so nothing is ever rounded.

#include <json.hpp>

#include "cwsurgery/casson_walker.hpp"
#include "cwsurgery/cosmetic.hpp"
#include "cwsurgery/obstruction.hpp"

namespace cwsurgery {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v);
Json rational_json(const Rational& v);

/// Accepts a JSON integer or a string holding an integer. Throws DomainError.
Integer integer_from_json(const Json& j);
/// Accepts a JSON integer or a string "P/Q" / "P". Throws DomainError.
Rational rational_from_json(const Json& j);
Slope slope_from_json(const Json& j);

/// Reads {"a2x", "a2y", "a3", "lk", "fx", "fy"}. Throws DomainError naming
/// the first missing or malformed field.
TwoComponentLinkData link_from_json(const Json& j);
Json link_json(const TwoComponentLinkData& link);

Json breakdown_json(const SurgeryFormulaBreakdown& b);
Json report_json(const ObstructionReport& r);
Json scan_json(const ScanReport& r);
Json grid_cell_json(const GridCell& cell);
Json case_json(const CaseResult& r);
Json certificate_json(const Certificate& c);
Json record_json(const KnotRecord& r);
Json verdict_json(const CosmeticVerdict& v);
Json partition_json(const CosmeticPartition& p);

}  // namespace cwsurgery
