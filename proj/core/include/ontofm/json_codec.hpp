#pragma once

// Wire formats of the HTTP API and the CLI's --json output.

#include "ontofm/fs_mirror.hpp"
#include "ontofm/graph.hpp"
#include "ontofm/search.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <vector>

namespace ontofm::json_codec {

using nlohmann::json;

json to_json(const Suggestion& s);
json to_json(const ScoredFile& f);
json to_json(const FolderNode& f);
json to_json(const FileEntry& f);
json to_json(const LoadReport& r);
json to_json(const SyncReport& r);
json to_json(const Constraint& c);
json to_json(const TypedValue& v);
json to_json(const std::map<ConceptId, std::vector<InstanceId>>& concepts);

/// {nodes, edges, roots, expanded, provenance, focus, layout}; nodes carry
/// label and concept for display.
json graph_to_json(const Ontology& o, const GraphState& s);

/// Strict inverse of graph_to_json. Edges are recomputed from the ontology
/// and the result is checked with check_graph_state.
GraphState graph_from_json(const Ontology& o, const json& j);

/// {concept, property, op, value} or {..., values: [lo, hi]} for between.
/// Values may be JSON numbers, strings (typed by the op, inferred for eq) or
/// {"type", "value"} objects. Throws ParseError or Error(InvalidConstraint).
Constraint constraint_from_json(const json& j);

/// {terms, scope, constraints}; any other key is rejected unless listed in
/// `extra_keys`.
Query query_from_json(const json& j, std::initializer_list<std::string_view> extra_keys = {});

}  // namespace ontofm::json_codec
