#include "gsh/graph_io.hpp"

#include <fstream>

#include "gsh/error.hpp"

namespace gsh {

namespace {

Rational length_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::ParseError, "edge length must be a string \"p/q\" or an integer");
}

std::string id_from_json(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  const auto& j = obj.at(key);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(Errc::ParseError, std::string("key '") + key + "' must be a string");
}

}  // namespace

RawGraph raw_graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.at("vertices").is_array()) {
    throw Error(Errc::ParseError, "graph needs a 'vertices' array");
  }
  RawGraph raw;
  for (const auto& v : doc.at("vertices")) {
    long genus = v.contains("genus") ? v.at("genus").get<long>() : 0;
    raw.vertices.push_back(RawVertex{id_from_json(v, "id"), genus});
  }
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.contains("length")) throw Error(Errc::ParseError, "edge without 'length'");
      raw.edges.push_back(RawEdge{id_from_json(e, "id"), id_from_json(e, "u"), id_from_json(e, "v"),
                                  length_from_json(e.at("length"))});
    }
  }
  return raw;
}

nlohmann::json graph_to_json(const PmGraph& graph) {
  nlohmann::json out;
  out["vertices"] = nlohmann::json::array();
  out["edges"] = nlohmann::json::array();
  for (const auto& v : graph.vertices()) out["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  for (const auto& e : graph.edges()) {
    out["edges"].push_back({{"id", e.id},
                            {"u", graph.vertices()[e.u].id},
                            {"v", graph.vertices()[e.v].id},
                            {"length", to_string(e.length)}});
  }
  return out;
}

PmGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return PmGraph::validate(raw_graph_from_json(doc));
}

}  // namespace gsh
