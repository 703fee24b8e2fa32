#include "gsh/pmgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "gsh/error.hpp"

namespace gsh {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string fresh_id(const std::string& base, const std::function<bool(std::string_view)>& taken) {
  if (!taken(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "~" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

PmGraph PmGraph::validate(const RawGraph& raw) {
  if (raw.vertices.empty()) throw Error(Errc::MalformedGraph, "graph has no vertices");

  PmGraph g;
  std::unordered_map<std::string, std::size_t> vindex;
  for (const auto& rv : raw.vertices) {
    if (rv.id.empty()) throw Error(Errc::MalformedGraph, "empty vertex id");
    if (rv.genus < 0) throw Error(Errc::MalformedGraph, "negative genus at vertex '" + rv.id + "'");
    if (!vindex.emplace(rv.id, g.vertices_.size()).second) {
      throw Error(Errc::MalformedGraph, "duplicate vertex id '" + rv.id + "'");
    }
    g.vertices_.push_back(Vertex{rv.id, static_cast<int>(rv.genus)});
  }

  std::unordered_map<std::string, std::size_t> eindex;
  for (const auto& re : raw.edges) {
    if (re.id.empty()) throw Error(Errc::MalformedGraph, "empty edge id");
    if (!eindex.emplace(re.id, g.edges_.size()).second) {
      throw Error(Errc::MalformedGraph, "duplicate edge id '" + re.id + "'");
    }
    auto iu = vindex.find(re.u);
    auto iv = vindex.find(re.v);
    if (iu == vindex.end() || iv == vindex.end()) {
      throw Error(Errc::MalformedGraph, "edge '" + re.id + "' has an unknown endpoint");
    }
    if (re.length <= 0) throw Error(Errc::NonPositiveLength, "edge '" + re.id + "' has length " + to_string(re.length));
    g.edges_.push_back(Edge{re.id, iu->second, iv->second, re.length});
  }

  const std::size_t n = g.vertices_.size();
  UnionFind uf(n);
  g.valence_.assign(n, 0);
  for (const auto& e : g.edges_) {
    ++g.valence_[e.u];
    ++g.valence_[e.v];
    uf.unite(e.u, e.v);
    g.volume_ += e.length;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (uf.find(i) != 0) throw Error(Errc::Disconnected, "vertex '" + g.vertices_[i].id + "' is not reachable");
  }

  g.canonical_.resize(n);
  int genus_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    g.canonical_[i] = g.valence_[i] - 2 + 2 * g.vertices_[i].genus;
    if (g.canonical_[i] < 0) {
      throw Error(Errc::NonEffectiveCanonicalDivisor,
                  "K(" + g.vertices_[i].id + ") = " + std::to_string(g.canonical_[i]));
    }
    genus_sum += g.vertices_[i].genus;
  }
  g.betti_ = static_cast<int>(g.edges_.size()) - static_cast<int>(n) + 1;
  g.genus_ = g.betti_ + genus_sum;
  if (g.genus_ < 1) throw Error(Errc::GenusZero, "genus is " + std::to_string(g.genus_));
  return g;
}

std::size_t PmGraph::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw Error(Errc::UnknownVertex, "no vertex '" + std::string(id) + "'");
}

std::size_t PmGraph::edge_index(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw Error(Errc::UnknownEdge, "no edge '" + std::string(id) + "'");
}

bool PmGraph::has_vertex(std::string_view id) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
}

bool PmGraph::has_edge(std::string_view id) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

RawGraph PmGraph::to_raw() const {
  RawGraph raw;
  for (const auto& v : vertices_) raw.vertices.push_back(RawVertex{v.id, v.genus});
  for (const auto& e : edges_) raw.edges.push_back(RawEdge{e.id, vertices_[e.u].id, vertices_[e.v].id, e.length});
  return raw;
}

std::vector<int> canonical_divisor(const PmGraph& graph) { return graph.canonical_divisor(); }

int genus(const PmGraph& graph) { return graph.genus(); }

PmGraph subdivide_edge(const PmGraph& graph, std::string_view edge_id, const Rational& t) {
  const std::size_t ei = graph.edge_index(edge_id);
  const Edge& e = graph.edges()[ei];
  if (t <= 0 || t >= e.length) {
    throw Error(Errc::SplitOutOfRange, "split point " + to_string(t) + " not inside edge of length " + to_string(e.length));
  }
  RawGraph raw = graph.to_raw();
  const std::string vid = fresh_id(e.id + ".p", [&](std::string_view s) { return graph.has_vertex(s); });
  const std::string eid = fresh_id(e.id + ".b", [&](std::string_view s) { return graph.has_edge(s); });
  raw.vertices.push_back(RawVertex{vid, 0});
  RawEdge& first = raw.edges[ei];
  const std::string far_end = first.v;
  first.v = vid;
  first.length = t;
  raw.edges.push_back(RawEdge{eid, vid, far_end, e.length - t});
  return PmGraph::validate(raw);
}

namespace {

/// Valence 2, genus 0, and not the base point of a single loop.
bool eliminable(const RawGraph& raw, std::size_t vi) {
  if (raw.vertices[vi].genus != 0) return false;
  const std::string& id = raw.vertices[vi].id;
  int ends = 0;
  for (const auto& e : raw.edges) {
    if (e.u == id && e.v == id) return false;
    ends += (e.u == id) + (e.v == id);
  }
  return ends == 2;
}

}  // namespace

bool has_eliminable_vertices(const PmGraph& graph) {
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    const auto& v = graph.vertices()[i];
    if (v.genus != 0 || graph.valence(i) != 2) continue;
    bool on_loop = false;
    for (const auto& e : graph.edges()) on_loop = on_loop || (e.is_loop() && e.u == i);
    if (!on_loop) return true;
  }
  return false;
}

PmGraph smooth_eliminable(const PmGraph& graph) {
  RawGraph raw = graph.to_raw();
  for (;;) {
    std::size_t best = raw.vertices.size();
    for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
      if (eliminable(raw, i) && (best == raw.vertices.size() || raw.vertices[i].id > raw.vertices[best].id)) best = i;
    }
    if (best == raw.vertices.size()) break;

    const std::string id = raw.vertices[best].id;
    std::vector<std::size_t> inc;
    for (std::size_t k = 0; k < raw.edges.size(); ++k) {
      if (raw.edges[k].u == id || raw.edges[k].v == id) inc.push_back(k);
    }
    std::size_t keep = inc[0], drop = inc[1];
    if (raw.edges[drop].id < raw.edges[keep].id) std::swap(keep, drop);
    auto other = [&](const RawEdge& e) { return e.u == id ? e.v : e.u; };
    RawEdge merged{raw.edges[keep].id, other(raw.edges[keep]), other(raw.edges[drop]),
                   raw.edges[keep].length + raw.edges[drop].length};
    raw.edges[keep] = merged;
    raw.edges.erase(raw.edges.begin() + static_cast<std::ptrdiff_t>(drop));
    raw.vertices.erase(raw.vertices.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return PmGraph::validate(raw);
}

PmGraph contract(const PmGraph& graph, const std::set<std::string>& edge_ids) {
  std::vector<bool> in_s(graph.num_edges(), false);
  for (const auto& id : edge_ids) in_s[graph.edge_index(id)] = true;

  const std::size_t n = graph.num_vertices();
  UnionFind uf(n);
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    if (in_s[k]) uf.unite(graph.edges()[k].u, graph.edges()[k].v);
  }

  // Per class: representative id, pushed-forward K, valence in the contracted graph.
  std::vector<std::size_t> rep_of(n);
  std::map<std::size_t, std::size_t> class_slot;
  std::vector<std::string> ids;
  std::vector<long> kpush;
  std::vector<long> val;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    auto [it, inserted] = class_slot.emplace(r, ids.size());
    if (inserted) {
      ids.push_back(graph.vertices()[i].id);
      kpush.push_back(0);
      val.push_back(0);
    }
    std::size_t slot = it->second;
    rep_of[i] = slot;
    if (graph.vertices()[i].id < ids[slot]) ids[slot] = graph.vertices()[i].id;
    kpush[slot] += graph.canonical_divisor()[i];
  }

  RawGraph raw;
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    if (in_s[k]) continue;
    const Edge& e = graph.edges()[k];
    val[rep_of[e.u]] += 1;
    val[rep_of[e.v]] += 1;
    raw.edges.push_back(RawEdge{e.id, ids[rep_of[e.u]], ids[rep_of[e.v]], e.length});
  }
  for (std::size_t s = 0; s < ids.size(); ++s) {
    long twice_q = kpush[s] - val[s] + 2;
    raw.vertices.push_back(RawVertex{ids[s], twice_q / 2});
  }
  return PmGraph::validate(raw);
}

PmGraph restrict_to(const PmGraph& graph, const std::set<std::string>& edge_ids) {
  for (const auto& id : edge_ids) graph.edge_index(id);
  std::set<std::string> complement;
  for (const auto& e : graph.edges()) {
    if (!edge_ids.count(e.id)) complement.insert(e.id);
  }
  return contract(graph, complement);
}

EdgeClassification classify_edges(const PmGraph& graph) {
  const int g = graph.genus();
  const std::size_t n = graph.num_vertices();
  const std::size_t m = graph.num_edges();

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = graph.edges()[k];
    adj[e.u].push_back({e.v, k});
    if (!e.is_loop()) adj[e.v].push_back({e.u, k});
  }

  EdgeClassification out;
  out.type.assign(m, 0);
  out.delta.by_type.assign(static_cast<std::size_t>(g / 2) + 1, Rational(0));

  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = graph.edges()[k];
    int type = 0;
    if (!e.is_loop()) {
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{e.u};
      seen[e.u] = true;
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (auto [y, idx] : adj[x]) {
          if (idx == k || seen[y]) continue;
          seen[y] = true;
          stack.push_back(y);
        }
      }
      if (!seen[e.v]) {
        long side_vertices = 0, side_edges = 0, side_q = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (seen[i]) {
            ++side_vertices;
            side_q += graph.vertices()[i].genus;
          }
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (j != k && seen[graph.edges()[j].u]) ++side_edges;
        }
        long side_genus = side_edges - side_vertices + 1 + side_q;
        type = static_cast<int>(std::min<long>(side_genus, g - side_genus));
      }
    }
    out.type[k] = type;
    out.delta.by_type[static_cast<std::size_t>(type)] += e.length;
    out.delta.total += e.length;
  }
  return out;
}

DeltaVector delta_vector(const PmGraph& graph) { return classify_edges(graph).delta; }

std::vector<PmGraph> wedge_decompose(const PmGraph& graph) {
  const std::size_t n = graph.num_vertices();
  const std::size_t m = graph.num_edges();
  if (m == 0) return {graph};

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = graph.edges()[k];
    if (e.is_loop()) {
      blocks.push_back({k});
      continue;
    }
    adj[e.u].push_back({e.v, k});
    adj[e.v].push_back({e.u, k});
  }

  // Tarjan's biconnected components, tracking edges by index so parallel
  // edges end up in the same block.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  int timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t x, std::size_t via) {
    disc[x] = low[x] = timer++;
    for (auto [y, idx] : adj[x]) {
      if (idx == via) continue;
      if (disc[y] == -1) {
        edge_stack.push_back(idx);
        dfs(y, idx);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          std::vector<std::size_t> block;
          for (;;) {
            std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == idx) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[y] < disc[x]) {
        edge_stack.push_back(idx);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  dfs(0, static_cast<std::size_t>(-1));

  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());

  std::vector<PmGraph> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::set<std::string> ids;
    for (std::size_t k : b) ids.insert(graph.edges()[k].id);
    out.push_back(restrict_to(graph, ids));
  }
  return out;
}

std::string structural_signature(const PmGraph& graph) {
  std::vector<std::string> vsig(graph.num_vertices());
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    std::vector<std::string> lens;
    for (const auto& e : graph.edges()) {
      if (e.u == i) lens.push_back(to_string(e.length));
      if (e.v == i) lens.push_back(to_string(e.length));
    }
    std::sort(lens.begin(), lens.end());
    std::ostringstream os;
    os << "(" << graph.vertices()[i].genus << "," << graph.valence(i);
    for (const auto& l : lens) os << "," << l;
    os << ")";
    vsig[i] = os.str();
  }
  std::vector<std::string> esig;
  for (const auto& e : graph.edges()) {
    std::string a = vsig[e.u], b = vsig[e.v];
    if (b < a) std::swap(a, b);
    esig.push_back("[" + to_string(e.length) + ":" + a + "-" + b + "]");
  }
  std::vector<std::string> sorted_v = vsig;
  std::sort(sorted_v.begin(), sorted_v.end());
  std::sort(esig.begin(), esig.end());
  std::string out = "g=" + std::to_string(graph.genus()) + ";V";
  for (const auto& s : sorted_v) out += s;
  out += ";E";
  for (const auto& s : esig) out += s;
  return out;
}

}  // namespace gsh
