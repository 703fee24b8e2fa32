#pragma once

#include <string_view>
#include <vector>

#include "gsh/pmgraph.hpp"

namespace gsh {

/// r(p, x(t)) = A t^2 + B t + C for arc length t measured from the first
/// endpoint of the edge.
struct EdgeProfile {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Rational& t) const { return a * t * t + b * t + c; }
};

struct InvariantReport {
  int genus = 0;
  DeltaVector delta;
  Rational tau;
  Rational theta;
  Rational lambda;
  Rational mu;
};

/// Resistance between two vertices, edges acting as resistors of their
/// length. Throws UnknownVertex.
Rational effective_resistance(const PmGraph& graph, std::string_view p, std::string_view q);

/// All pairwise vertex resistances, indexed like `vertices()`.
std::vector<std::vector<Rational>> resistance_matrix(const PmGraph& graph);

/// Interpolates r(p, .) on the edge through the samples t = 0, l/2, l and
/// checks t = l/4. Throws ProfileInterpolationMismatch, UnknownVertex,
/// UnknownEdge.
EdgeProfile resistance_profile(const PmGraph& graph, std::string_view p, std::string_view edge_id);

/// tau = 1/4 sum_e int (d/dt r(p, x))^2 dt. `base` defaults to the first vertex.
Rational tau(const PmGraph& graph);
Rational tau(const PmGraph& graph, std::string_view base);

/// sum over ordered vertex pairs of K(p) K(q) r(p, q).
Rational theta_invariant(const PmGraph& graph);

/// (8g+4) lambda = 6(g-1) tau + theta/2 + (g+1) delta/2.
Rational lambda_invariant(const PmGraph& graph);

/// phi = [lambda - (delta + eps)/12] * 6(2g+1)/(g-1). Throws GenusTooSmall for g < 2.
Rational phi_from_lambda_epsilon(int g, const Rational& lambda, const Rational& epsilon, const Rational& delta);

/// mu = (8g+4) lambda - g delta_0 - 4 sum_h h(g-h) delta_h.
Rational slope_mu(const PmGraph& graph);

/// Height jump 4 m1 m2/(m1+m2) (g-h-1) h for two smooth components of genera
/// h and g-h-1 meeting in two points. Throws BadParameters.
Rational height_jump_twogon(int g, int h, const Rational& m1, const Rational& m2);

InvariantReport invariant_report(const PmGraph& graph);

}  // namespace gsh
