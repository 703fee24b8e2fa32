#include "random_graphs.hpp"

#include <string>
#include <vector>

namespace testgen {

using gsh::PmGraph;
using gsh::Rational;
using gsh::RawEdge;
using gsh::RawGraph;
using gsh::RawVertex;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string vid(int i) { return "v" + std::to_string(i); }

}  // namespace

Rational random_length(Rng& rng) { return Rational(uniform(rng, 1, 12), uniform(rng, 1, 4)); }

PmGraph random_pm_graph(Rng& rng, int max_vertices, int max_genus) {
  for (;;) {
    const int n = uniform(rng, 1, max_vertices);
    RawGraph raw;
    std::vector<int> valence(static_cast<std::size_t>(n), 0);
    int edge_count = 0;
    auto add_edge = [&](int u, int v) {
      raw.edges.push_back(RawEdge{"e" + std::to_string(edge_count++), vid(u), vid(v), random_length(rng)});
      valence[static_cast<std::size_t>(u)]++;
      valence[static_cast<std::size_t>(v)]++;
    };
    for (int i = 1; i < n; ++i) add_edge(uniform(rng, 0, i - 1), i);
    const int extra = uniform(rng, 0, std::min(max_genus, 4));
    for (int k = 0; k < extra; ++k) add_edge(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    const int betti = extra;

    int genus = betti;
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (valence[iu] <= 1) {
        q[iu] = 1;
      } else if (uniform(rng, 0, 3) == 0) {
        q[iu] = 1;
      }
      genus += q[iu];
    }
    if (genus < 1 || genus > max_genus) continue;
    for (int i = 0; i < n; ++i) raw.vertices.push_back(RawVertex{vid(i), q[static_cast<std::size_t>(i)]});
    return PmGraph::validate(raw);
  }
}

PmGraph random_tree(Rng& rng, int genus, int max_vertices) {
  for (;;) {
    const int n = uniform(rng, 2, max_vertices);
    RawGraph raw;
    std::vector<int> valence(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
      const int u = uniform(rng, 0, i - 1);
      raw.edges.push_back(RawEdge{"e" + std::to_string(i), vid(u), vid(i), random_length(rng)});
      valence[static_cast<std::size_t>(u)]++;
      valence[static_cast<std::size_t>(i)]++;
    }
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int i = 0; i < n; ++i) {
      if (valence[static_cast<std::size_t>(i)] == 1) {
        q[static_cast<std::size_t>(i)] = 1;
        ++used;
      }
    }
    if (used > genus) continue;
    while (used < genus) {
      q[static_cast<std::size_t>(uniform(rng, 0, n - 1))]++;
      ++used;
    }
    for (int i = 0; i < n; ++i) raw.vertices.push_back(RawVertex{vid(i), q[static_cast<std::size_t>(i)]});
    return PmGraph::validate(raw);
  }
}

PmGraph add_genus(const PmGraph& graph, const std::string& vertex, int extra) {
  RawGraph raw = graph.to_raw();
  for (auto& v : raw.vertices) {
    if (v.id == vertex) v.genus += extra;
  }
  return PmGraph::validate(raw);
}

Wedge random_wedge(Rng& rng, int max_vertices_each, int max_genus_each) {
  PmGraph a = random_pm_graph(rng, max_vertices_each, max_genus_each);
  PmGraph b = random_pm_graph(rng, max_vertices_each, max_genus_each);
  const auto& pa = a.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.num_vertices()) - 1))];
  const auto& pb = b.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(b.num_vertices()) - 1))];
  const std::string glued = "a." + pa.id;

  RawGraph raw;
  for (const auto& v : a.vertices()) {
    raw.vertices.push_back(RawVertex{"a." + v.id, v.id == pa.id ? v.genus + pb.genus : v.genus});
  }
  for (const auto& v : b.vertices()) {
    if (v.id != pb.id) raw.vertices.push_back(RawVertex{"b." + v.id, v.genus});
  }
  auto name_b = [&](const std::string& id) { return id == pb.id ? glued : "b." + id; };
  for (const auto& e : a.edges()) {
    raw.edges.push_back(RawEdge{"a." + e.id, "a." + a.vertices()[e.u].id, "a." + a.vertices()[e.v].id, e.length});
  }
  for (const auto& e : b.edges()) {
    raw.edges.push_back(RawEdge{"b." + e.id, name_b(b.vertices()[e.u].id), name_b(b.vertices()[e.v].id), e.length});
  }
  Wedge w{PmGraph::validate(raw), a, b, pa.id, pb.id};
  return w;
}

PmGraph two_gon(int g, int h, const Rational& m1, const Rational& m2) {
  RawGraph raw;
  raw.vertices = {RawVertex{"x", h}, RawVertex{"y", g - h - 1}};
  raw.edges = {RawEdge{"e1", "x", "y", m1}, RawEdge{"e2", "x", "y", m2}};
  return PmGraph::validate(raw);
}

PmGraph loop_graph(int g, const Rational& length) {
  RawGraph raw;
  raw.vertices = {RawVertex{"x", g - 1}};
  raw.edges = {RawEdge{"e", "x", "x", length}};
  return PmGraph::validate(raw);
}

PmGraph segment_graph(int g, int h, const Rational& length) {
  RawGraph raw;
  raw.vertices = {RawVertex{"x", h}, RawVertex{"y", g - h}};
  raw.edges = {RawEdge{"e", "x", "y", length}};
  return PmGraph::validate(raw);
}

}  // namespace testgen
