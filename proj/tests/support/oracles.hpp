#pragma once

// Reference computations that share no code with the library: spanning-tree
// resistances, resistance profiles from explicit subdivisions, theta series
// in one variable and the arithmetic-geometric mean.

#include <complex>
#include <vector>

#include "gsh/pmgraph.hpp"

namespace oracle {

using gsh::Rational;

struct Edge {
  int u = 0;
  int v = 0;
  Rational length;
};

struct Network {
  int vertices = 0;
  std::vector<Edge> edges;
};

Network network_of(const gsh::PmGraph& graph);

/// Sum over spanning trees of the product of edge conductances 1/length.
Rational weighted_tree_count(const Network& net);

/// r(p, q) = T(G with p and q identified) / T(G).
Rational tree_resistance(const Network& net, int p, int q);

/// tau from r(p, .) sampled on each edge at 0, l/4, l/2, 3l/4, l through
/// explicit subdivisions; throws std::logic_error if the samples are not on
/// one parabola.
Rational tau_by_sampling(const Network& net, int base);

using C = std::complex<long double>;

/// sum_n exp(pi i (n + a/2)^2 tau + pi i (n + a/2) b), |n| <= 60.
C theta_series(int a, int b, C tau);

long double agm(long double a, long double b);

/// Period ratio of y^2 = (x - e1)(x - e2)(x - e3), e1 > e2 > e3 real.
C elliptic_tau_real_roots(long double e1, long double e2, long double e3);

/// Moves tau into the standard fundamental domain of SL2(Z).
C reduce_upper_half_plane(C tau);

}  // namespace oracle
