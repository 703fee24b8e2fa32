#include "gsh/report_io.hpp"

namespace gsh {

using nlohmann::json;

json delta_to_json(const DeltaVector& d) {
  json by_type = json::array();
  for (const auto& x : d.by_type) by_type.push_back(to_string(x));
  return {{"total", to_string(d.total)}, {"by_type", by_type}};
}

json invariant_report_to_json(const InvariantReport& r) {
  return {{"genus", r.genus},
          {"tau", to_string(r.tau)},
          {"theta", to_string(r.theta)},
          {"lambda", to_string(r.lambda)},
          {"mu", to_string(r.mu)},
          {"delta", delta_to_json(r.delta)}};
}

json genus3_report_to_json(const PmGraph& graph) {
  const Genus3Report r = genus3_report(graph);
  json out{{"h", to_string(r.h)},
           {"ord_lower_bound", to_string(r.ord_lower_bound)},
           {"local_bound", to_string(r.local_bound)},
           {"local_bound_positive", r.local_bound_positive},
           {"phi_yamaki", to_string(r.phi_yamaki)},
           {"phi_yamaki_nonnegative", r.phi_yamaki_nonnegative},
           {"lambda", to_string(lambda_invariant(graph))},
           {"delta", delta_to_json(delta_vector(graph))}};
  if (r.h_type_pair) out["h_type_pair"] = {r.h_type_pair->first, r.h_type_pair->second};
  return out;
}

}  // namespace gsh
