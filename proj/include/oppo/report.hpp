#pragma once

#include <string>

#include <json.hpp>

#include "oppo/graph.hpp"
#include "oppo/recognize.hpp"

namespace oppo {

inline constexpr const char* kVerdictSchema = "oppo-verdict/1";

/// Certificate kind tag: "orientation", "odd-walk", "flip-refutation",
/// "pattern" or "none".
std::string certificate_kind(const Certificate& c);

/// {schema, class, decision, method, certificate{kind, data}, stats{...}}
/// plus "witness" when present. Vertices appear by label.
nlohmann::json verdict_to_json(const Graph& g, const Verdict& v);

/// Multi-line plain text summary.
std::string verdict_to_text(const Graph& g, const Verdict& v);

nlohmann::json pattern_match_json(const Graph& g, const PatternMatch& m);

}  // namespace oppo
