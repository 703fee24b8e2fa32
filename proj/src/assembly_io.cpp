#include "gsh/assembly_io.hpp"

#include <algorithm>
#include <fstream>

#include "gsh/error.hpp"
#include "gsh/graph_io.hpp"

namespace gsh {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw Error(Errc::ParseError, what + " must be a rational string or a number");
}

Real real_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<Real>();
  throw Error(Errc::ParseError, what + " must be a number");
}

std::optional<Rational> opt_rational(const json& obj, const char* key, const std::string& place) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return rational_from_json(obj.at(key), "place '" + place + "' field " + key);
}

std::optional<Real> opt_real(const json& obj, const char* key, const std::string& place) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return real_from_json(obj.at(key), "place '" + place + "' field " + key);
}

std::optional<Mixed> opt_mixed(const json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return mixed_from_json(obj.at(key));
}

std::string label_of(const json& obj, std::size_t index, const char* kind) {
  if (obj.contains("label")) {
    const auto& l = obj.at("label");
    if (l.is_string()) return l.get<std::string>();
    if (l.is_number_integer()) return std::to_string(l.get<long long>());
  }
  return std::string(kind) + std::to_string(index);
}

json real_matrix(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(static_cast<double>(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RMatrix real_matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, std::string(what) + " must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  RMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(Errc::ParseError, std::string(what) + " must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = real_from_json(row.at(static_cast<std::size_t>(k)), what);
  }
  return m;
}

template <class T>
void put(json& obj, const char* key, const std::optional<T>& v) {
  if (!v) return;
  if constexpr (std::is_same_v<T, Rational>) {
    obj[key] = to_string(*v);
  } else if constexpr (std::is_same_v<T, Mixed>) {
    obj[key] = mixed_to_json(*v);
  } else {
    obj[key] = static_cast<double>(*v);
  }
}

CMatrix parse_omega(const json& j);

PlaceTable parse_table(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "place table must be a JSON object");
  PlaceTable t;
  if (j.contains("genus")) t.genus = j.at("genus").get<int>();
  if (j.contains("degree")) t.degree = j.at("degree").get<int>();
  t.omega_hat_sq = opt_mixed(j, "omega_hat_sq");
  t.omega_bar_sq = opt_mixed(j, "omega_bar_sq");
  t.faltings_degree = opt_mixed(j, "faltings_degree");
  t.neron_tate_height = opt_mixed(j, "neron_tate_height");

  if (j.contains("finite")) {
    std::size_t i = 0;
    for (const auto& p : j.at("finite")) {
      FinitePlaceRecord r;
      r.label = label_of(p, i++, "finite");
      if (!p.contains("log_nv")) throw Error(Errc::ParseError, "place '" + r.label + "' needs log_nv");
      r.log_nv = mixed_from_json(p.at("log_nv"));
      r.ord = opt_rational(p, "ord", r.label);
      r.lambda = opt_rational(p, "lambda", r.label);
      r.epsilon = opt_rational(p, "epsilon", r.label);
      r.phi = opt_rational(p, "phi", r.label);
      r.delta = opt_rational(p, "delta", r.label);
      r.h = opt_rational(p, "h", r.label);
      r.ord_lower_bound = opt_rational(p, "ord_lower_bound", r.label);
      if (p.contains("delta_by_type")) {
        std::vector<Rational> v;
        for (const auto& x : p.at("delta_by_type")) v.push_back(rational_from_json(x, "delta_by_type"));
        r.delta_by_type = std::move(v);
      }
      if (p.contains("graph")) r.graph = PmGraph::validate(raw_graph_from_json(p.at("graph")));
      t.finite.push_back(std::move(r));
    }
  }
  if (j.contains("infinite")) {
    std::size_t i = 0;
    for (const auto& p : j.at("infinite")) {
      InfinitePlaceRecord r;
      r.label = label_of(p, i++, "infinite");
      r.log_norm_chi18 = opt_real(p, "log_norm_chi18", r.label);
      r.lambda = opt_real(p, "lambda", r.label);
      r.phi = opt_real(p, "phi", r.label);
      r.delta = opt_real(p, "delta", r.label);
      if (p.contains("omega")) r.omega = omega_from_json(p.at("omega"));
      t.infinite.push_back(std::move(r));
    }
  }
  return t;
}

bool close_enough(const Mixed& a, const Mixed& b) {
  if (!a.inexact && !b.inexact) return a.exact == b.exact;
  const Real scale = std::max<Real>({1, std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) <= 1e-10 * scale;
}

}  // namespace

Mixed mixed_from_json(const json& j) {
  if (j.is_string()) return Mixed::of(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Mixed::of(Rational(j.get<long long>()));
  if (j.is_number()) return Mixed::of(j.get<Real>());
  if (j.is_object() && j.contains("exact") && j.contains("approx")) {
    Mixed m = Mixed::of(rational_from_json(j.at("exact"), "exact part"));
    m.approx = real_from_json(j.at("approx"), "approx part");
    m.inexact = true;
    return m;
  }
  throw Error(Errc::ParseError, "expected a rational string, a number or {exact, approx}");
}

json mixed_to_json(const Mixed& m) {
  if (!m.inexact) return to_string(m.exact);
  if (m.exact == 0) return static_cast<double>(m.approx);
  return {{"exact", to_string(m.exact)}, {"approx", static_cast<double>(m.approx)}, {"value", static_cast<double>(m.value())}};
}

CMatrix omega_from_json(const json& j) {
  try {
    return parse_omega(j);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

CMatrix load_omega(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return omega_from_json(doc);
}

namespace {

CMatrix parse_omega(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw Error(Errc::ParseError, "period matrix needs 're' and 'im'");
  }
  const RMatrix re = real_matrix_from_json(j.at("re"), "re");
  const RMatrix im = real_matrix_from_json(j.at("im"), "im");
  if (re.rows() != im.rows()) throw Error(Errc::ParseError, "'re' and 'im' differ in size");
  if (j.contains("g") && j.at("g").get<Eigen::Index>() != re.rows()) {
    throw Error(Errc::ParseError, "'g' does not match the matrix size");
  }
  CMatrix m(re.rows(), re.cols());
  for (Eigen::Index a = 0; a < re.rows(); ++a) {
    for (Eigen::Index b = 0; b < re.cols(); ++b) m(a, b) = Complex(re(a, b), im(a, b));
  }
  return m;
}

}  // namespace

json omega_to_json(const CMatrix& omega) {
  return {{"g", omega.rows()}, {"re", real_matrix(omega.real())}, {"im", real_matrix(omega.imag())}};
}

PlaceTable place_table_from_json(const json& j) {
  try {
    return parse_table(j);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

json place_table_to_json(const PlaceTable& t) {
  json out{{"genus", t.genus}, {"degree", t.degree}};
  put(out, "omega_hat_sq", t.omega_hat_sq);
  put(out, "omega_bar_sq", t.omega_bar_sq);
  put(out, "faltings_degree", t.faltings_degree);
  put(out, "neron_tate_height", t.neron_tate_height);
  out["finite"] = json::array();
  for (const auto& p : t.finite) {
    json r{{"label", p.label}, {"log_nv", mixed_to_json(p.log_nv)}};
    put(r, "ord", p.ord);
    put(r, "lambda", p.lambda);
    put(r, "epsilon", p.epsilon);
    put(r, "phi", p.phi);
    put(r, "delta", p.delta);
    put(r, "h", p.h);
    put(r, "ord_lower_bound", p.ord_lower_bound);
    if (p.delta_by_type) {
      json v = json::array();
      for (const auto& x : *p.delta_by_type) v.push_back(to_string(x));
      r["delta_by_type"] = v;
    }
    if (p.graph) r["graph"] = graph_to_json(*p.graph);
    out["finite"].push_back(r);
  }
  out["infinite"] = json::array();
  for (const auto& p : t.infinite) {
    json r{{"label", p.label}};
    put(r, "log_norm_chi18", p.log_norm_chi18);
    put(r, "lambda", p.lambda);
    put(r, "phi", p.phi);
    put(r, "delta", p.delta);
    if (p.omega) r["omega"] = omega_to_json(*p.omega);
    out["infinite"].push_back(r);
  }
  return out;
}

PlaceTable load_place_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return place_table_from_json(doc);
}

json gs_height_to_json(const GsHeight& h) {
  json places = json::array();
  for (const auto& c : h.places) {
    json r{{"label", c.label}, {"finite", c.finite}, {"contribution", mixed_to_json(c.value)}};
    if (c.at_lower_bound) r["contribution_at_ord_lower_bound"] = mixed_to_json(*c.at_lower_bound);
    places.push_back(r);
  }
  return {{"gs_height", mixed_to_json(h.value)}, {"gs_height_value", static_cast<double>(h.value.value())}, {"places", places}};
}

json conjecture_report_to_json(const ConjectureReport& r) {
  return {{"omega_hat_sq", mixed_to_json(r.omega_hat_sq)},
          {"phi_sum", mixed_to_json(r.phi_sum)},
          {"conjectural_bound", mixed_to_json(r.conjectural_bound)},
          {"conjectural", to_string(r.conjectural)},
          {"unconditional_bound", mixed_to_json(r.unconditional_bound)},
          {"unconditional", to_string(r.unconditional)}};
}

json assemble_report(const PlaceTable& table, const EvalParams& params) {
  const PlaceTable t = period_autofill(graph_autofill(table), params);
  json out{{"table", place_table_to_json(t)}};
  json skipped = json::array();
  bool consistent = true;
  auto attempt = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() != Errc::MissingField && e.code() != Errc::WrongGenus) throw;
      skipped.push_back({{"identity", name}, {"reason", e.what()}});
    }
  };

  std::optional<Mixed> gs;
  attempt("gs_height", [&] {
    const GsHeight h = gs_height(t);
    gs = h.value;
    out["gs_height"] = gs_height_to_json(h);
  });
  attempt("faltings", [&] {
    const Mixed deg = faltings_from_chi18(t);
    out["faltings_degree_from_chi18"] = mixed_to_json(deg);
    if (t.faltings_degree && !close_enough(*t.faltings_degree, deg)) {
      consistent = false;
      out["faltings_degree_mismatch"] = true;
    }
    const Mixed route = faltings_route_height(t.genus, deg, lambda_terms(t));
    out["faltings_route_height"] = mixed_to_json(route);
    if (gs && !close_enough(*gs, route)) {
      consistent = false;
      out["triangle_mismatch"] = true;
    }
  });
  attempt("noether", [&] {
    const Mixed r = noether_check(t);
    out["noether_residual"] = mixed_to_json(r);
    if (!close_enough(r, Mixed{})) consistent = false;
  });
  attempt("zhang", [&] {
    if (!t.omega_hat_sq) throw Error(Errc::MissingField, "table has no omega_hat_sq");
    const Mixed h = t.neron_tate_height ? *t.neron_tate_height : Mixed{};
    const Mixed z = zhang_identity(t.genus, *t.omega_hat_sq, phi_terms(t), t.degree, h);
    out["zhang_height"] = mixed_to_json(z);
    if (gs && (!t.neron_tate_height || close_enough(h, Mixed{})) && !close_enough(*gs, z)) {
      consistent = false;
      out["zhang_mismatch"] = true;
    }
  });
  out["skipped"] = skipped;
  out["consistent"] = consistent;
  return out;
}

}  // namespace gsh
