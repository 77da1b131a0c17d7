#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "cutoffmatch/cutoff_engine.hpp"
#include "cutoffmatch/egalitarian.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/stability.hpp"

namespace cutoffmatch {

using Json = nlohmann::ordered_json;

// Rationals travel as strings: "3", "-1/4".
Json rational_json(const Rational& value);

Json matching_json(const Instance& inst, const Matching& m);
Json cutoffs_json(const Instance& inst, const CutoffVector& d);
Json allocation_json(const Instance& inst, const FundingAllocation& allocation);
Json verdict_json(const Instance& inst, const StabilityVerdict& verdict);
Json allocation_report_json(const Instance& inst, const EgalitarianResult& result);

// FNV-1a over the canonical instance JSON, as 16 hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace cutoffmatch
