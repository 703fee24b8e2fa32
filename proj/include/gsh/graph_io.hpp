#pragma once

#include <string>

#include <json.hpp>

#include "gsh/pmgraph.hpp"

namespace gsh {

/// {"vertices":[{"id":"v1","genus":1}],"edges":[{"id":"e1","u":"v1","v":"v2","length":"3/2"}]}
/// Lengths may be strings ("p/q", decimals) or JSON integers. Throws
/// Error(ParseError) on structural problems; semantic checks are left to
/// PmGraph::validate.
RawGraph raw_graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const PmGraph& graph);

PmGraph load_graph(const std::string& path);

}  // namespace gsh
