#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "gsh/numeric.hpp"

namespace gsh {

struct QuadratureParams {
  /// Relative change between successive refinements that counts as converged.
  Real tol = 1e-13;
  int min_nodes = 16;
  /// Gauss-Jacobi node cap; harder integrands go to tanh-sinh.
  int max_nodes = 1 << 10;
  /// Tanh-sinh step halvings before giving up.
  int max_de_levels = 10;
  /// Multiplies every node count; 2 gives the doubled rule used in convergence checks.
  int node_multiplier = 1;
};

struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1], nodes
/// descending. Cached; safe to call concurrently.
const QuadratureRule& gauss_jacobi_rule(int n, Real alpha, Real beta);

/// Integrand f(s, 1+s, 1-s); the endpoint distances are passed separately so
/// callers can avoid cancellation next to the endpoints.
using JacobiIntegrand = std::function<Complex(Real, Real, Real)>;

struct QuadratureResult {
  Complex value;
  int nodes = 0;
  bool double_exponential = false;
  Real change = 0;
  /// sum of |weight * f| over the final rule.
  Real scale = 0;
};

/// int_{-1}^{1} (1-s)^alpha (1+s)^beta f(s) ds. `rho` is the Bernstein
/// ellipse parameter of the nearest singularity of f; when Gauss-Jacobi
/// would need more than max_nodes the tanh-sinh rule is used instead.
/// Throws QuadratureNonConvergence.
QuadratureResult integrate_jacobi(const JacobiIntegrand& f, Real alpha, Real beta, Real rho,
                                  const QuadratureParams& params = {});

/// Bernstein ellipse parameter |z + sqrt(z^2 - 1)| >= 1 of a point z.
Real bernstein_rho(Complex z);

}  // namespace gsh
