#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gsh/rational.hpp"

namespace gsh {

/// Unvalidated vertex/edge lists, as read from a graph file.
struct RawVertex {
  std::string id;
  long genus = 0;
};

struct RawEdge {
  std::string id;
  std::string u;
  std::string v;
  Rational length;
};

struct RawGraph {
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
};

struct Vertex {
  std::string id;
  int genus = 0;
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  Rational length;

  bool is_loop() const { return u == v; }
};

/// Polarized metrized graph: a connected weighted multigraph (loops allowed)
/// with a genus marking q on vertices such that K(p) = v(p) - 2 + 2q(p) is
/// effective and g = b1 + sum q >= 1. Instances are immutable and only
/// obtainable through `validate`, so every PmGraph satisfies these invariants.
class PmGraph {
 public:
  /// Throws Error with MalformedGraph (duplicate or dangling ids),
  /// NonPositiveLength, Disconnected, NonEffectiveCanonicalDivisor or GenusZero.
  static PmGraph validate(const RawGraph& raw);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  int genus() const { return genus_; }
  int betti_number() const { return betti_; }
  /// Number of edge ends at the vertex; a loop contributes two.
  int valence(std::size_t vertex) const { return valence_[vertex]; }
  const std::vector<int>& canonical_divisor() const { return canonical_; }
  /// Total edge length.
  const Rational& volume() const { return volume_; }

  /// Throws Error(UnknownVertex).
  std::size_t vertex_index(std::string_view id) const;
  /// Throws Error(UnknownEdge).
  std::size_t edge_index(std::string_view id) const;
  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;

  RawGraph to_raw() const;

 private:
  PmGraph() = default;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> valence_;
  std::vector<int> canonical_;
  Rational volume_;
  int genus_ = 0;
  int betti_ = 0;
};

/// K(p) = v(p) - 2 + 2 q(p), indexed like `vertices()`.
std::vector<int> canonical_divisor(const PmGraph& graph);

int genus(const PmGraph& graph);

/// Inserts a genus-0 vertex at arc length `t` from the first endpoint of the
/// edge. Throws SplitOutOfRange unless 0 < t < length, UnknownEdge.
PmGraph subdivide_edge(const PmGraph& graph, std::string_view edge_id, const Rational& t);

/// Removes every valence-2 genus-0 vertex, merging its two edge segments. A
/// circle made only of such vertices keeps its lexicographically smallest
/// vertex as base point. Merged edges take the smaller id.
PmGraph smooth_eliminable(const PmGraph& graph);

bool has_eliminable_vertices(const PmGraph& graph);

/// Contracts the given edges. Merged vertices take the lexicographically
/// smallest id and the genus q_S(w) = (K_push(w) - val(w) + 2) / 2.
PmGraph contract(const PmGraph& graph, const std::set<std::string>& edge_ids);

/// Contracts every edge outside `edge_ids`.
PmGraph restrict_to(const PmGraph& graph, const std::set<std::string>& edge_ids);

/// Total edge weight per type h = 0..floor(g/2).
struct DeltaVector {
  std::vector<Rational> by_type;
  Rational total;

  const Rational& operator[](std::size_t h) const { return by_type.at(h); }
  Rational at_or_zero(std::size_t h) const { return h < by_type.size() ? by_type[h] : Rational(0); }
};

struct EdgeClassification {
  /// Type of each edge, indexed like `edges()`.
  std::vector<int> type;
  DeltaVector delta;
};

/// An edge is of type 0 when removing its interior leaves the graph
/// connected; otherwise its type is the smaller genus of the two sides.
EdgeClassification classify_edges(const PmGraph& graph);

DeltaVector delta_vector(const PmGraph& graph);

/// Splits the graph at cut vertices into irreducible blocks, each returned as
/// the genus-g pm-graph obtained by contracting all edges outside the block.
std::vector<PmGraph> wedge_decompose(const PmGraph& graph);

/// Sorted structural signature (vertex genus/valence, edge lengths and
/// endpoint signatures) used to compare graphs up to relabeling.
std::string structural_signature(const PmGraph& graph);

}  // namespace gsh
