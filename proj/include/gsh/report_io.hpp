#pragma once

#include <json.hpp>

#include "gsh/electrical.hpp"
#include "gsh/genus3.hpp"

namespace gsh {

/// {"total": "p/q", "by_type": ["p/q", ...]}.
nlohmann::json delta_to_json(const DeltaVector& d);

/// {"genus", "tau", "theta", "lambda", "mu", "delta"}, rationals as strings.
nlohmann::json invariant_report_to_json(const InvariantReport& r);

/// Genus-3 report plus lambda and delta of the same graph.
nlohmann::json genus3_report_to_json(const PmGraph& graph);

}  // namespace gsh
