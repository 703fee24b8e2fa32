#pragma once

#include <random>

#include "gsh/pmgraph.hpp"

namespace testgen {

using Rng = std::mt19937_64;

/// Random positive rational p/q with 1 <= p <= 12, 1 <= q <= 4.
gsh::Rational random_length(Rng& rng);

/// Connected multigraph (loops and parallel edges allowed) with at most
/// `max_vertices` vertices and genus between 1 and `max_genus`; leaves get
/// positive genus so the canonical divisor is effective.
gsh::PmGraph random_pm_graph(Rng& rng, int max_vertices = 8, int max_genus = 6);

/// Polarized metrized tree of the given genus.
gsh::PmGraph random_tree(Rng& rng, int genus, int max_vertices = 6);

/// Glues a vertex of `a` to a vertex of `b`; the glued vertex carries the
/// sum of the two genera. Ids are prefixed "a." and "b.".
struct Wedge {
  gsh::PmGraph graph;
  gsh::PmGraph left;
  gsh::PmGraph right;
  std::string left_point;
  std::string right_point;
};
Wedge random_wedge(Rng& rng, int max_vertices_each = 4, int max_genus_each = 3);

/// Adds `extra` to the genus of one vertex.
gsh::PmGraph add_genus(const gsh::PmGraph& graph, const std::string& vertex, int extra);

/// Two vertices of genera h and g - h - 1 joined by edges of lengths m1, m2.
gsh::PmGraph two_gon(int g, int h, const gsh::Rational& m1, const gsh::Rational& m2);

/// One vertex of genus g - 1 with a loop.
gsh::PmGraph loop_graph(int g, const gsh::Rational& length);

/// Two vertices of genera h and g - h joined by one edge.
gsh::PmGraph segment_graph(int g, int h, const gsh::Rational& length);

}  // namespace testgen
