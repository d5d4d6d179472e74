// JSON forms of reports, count breakdowns and LCD censuses.
#pragma once

#include "json.hpp"

#include "negacycl/counting.hpp"
#include "negacycl/factorization.hpp"
#include "negacycl/negacyclic.hpp"

namespace negacycl {

using Json = nlohmann::ordered_json;

Json to_json(const FactorizationReport& report);
/// Rebuilds a report, including its field, from to_json output.
FactorizationReport report_from_json(const Json& j);

Json to_json(const CountBreakdown& b);
CountBreakdown breakdown_from_json(const Json& j);

/// "count" is an integer when it fits in 64 bits and a decimal string otherwise.
Json to_json(const LcdCensus& census);
LcdCensus census_from_json(const Json& j);

bool same_report(const FactorizationReport& a, const FactorizationReport& b);
bool same_breakdown(const CountBreakdown& a, const CountBreakdown& b);
bool same_census(const LcdCensus& a, const LcdCensus& b);

}  // namespace negacycl
