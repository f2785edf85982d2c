#ifndef TREETP_REPORT_JSON_HPP
#define TREETP_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "treetp/search.hpp"
#include "treetp/spectral.hpp"
#include "treetp/ttp.hpp"
#include "treetp/verdict.hpp"

namespace treetp {

/// Ordered JSON keeps key order stable so identical inputs serialize to
/// identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const VerdictReport& report);
Json to_json(const HypothesisReport& report);
Json to_json(const SignPatternReport& report);
Json to_json(const EigenPair& pair);
Json to_json(const TheoremVerdict& verdict);
Json to_json(const SearchOutcome& outcome);

const char* to_string(TheoremStatus status);

}  // namespace treetp

#endif
