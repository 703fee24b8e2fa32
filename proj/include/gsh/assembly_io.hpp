#pragma once

#include <string>

#include <json.hpp>

#include "gsh/assembly.hpp"

namespace gsh {

/// A JSON string ("p/q", decimal) is exact, a JSON number is a float, and
/// {"exact": "p/q", "approx": x} carries both parts.
Mixed mixed_from_json(const nlohmann::json& j);
nlohmann::json mixed_to_json(const Mixed& m);

/// {"g": 3, "re": [[...]], "im": [[...]]}, square and of equal shape; "g"
/// is optional on input. Throws ParseError.
CMatrix omega_from_json(const nlohmann::json& j);
nlohmann::json omega_to_json(const CMatrix& omega);
CMatrix load_omega(const std::string& path);

/// {"genus": 3, "degree": 1, "omega_hat_sq": ..., "omega_bar_sq": ...,
///  "faltings_degree": ..., "neron_tate_height": ...,
///  "finite": [{"label": "2", "log_nv": "1", "ord": "6", "lambda": "2/7",
///              "epsilon": ..., "phi": ..., "delta": ..., "graph": {...}}],
///  "infinite": [{"label": "sigma", "log_norm_chi18": 70.1, "lambda": 0.5,
///                "phi": ..., "delta": ..., "omega": {"re": ..., "im": ...}}]}
/// Finite-place rationals are strings or JSON numbers read by their decimal
/// text. Throws ParseError, and the graph validation errors.
PlaceTable place_table_from_json(const nlohmann::json& j);
nlohmann::json place_table_to_json(const PlaceTable& table);
PlaceTable load_place_table(const std::string& path);

nlohmann::json gs_height_to_json(const GsHeight& h);
nlohmann::json conjecture_report_to_json(const ConjectureReport& r);

/// Autofills the table from graphs and period matrices, then evaluates every
/// identity whose inputs are present: the height by place, the Faltings route
/// and its agreement with the height, the Noether residual and Zhang's
/// identity (compared only when the Neron-Tate term is zero or absent).
/// Identities lacking data are listed under "skipped"; "consistent" is false
/// when any evaluated identity disagrees. Rethrows errors other than
/// MissingField and WrongGenus.
nlohmann::json assemble_report(const PlaceTable& table, const EvalParams& params = {});

}  // namespace gsh
