#include "gsh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "gsh/error.hpp"

namespace gsh {

namespace {

struct Recurrence {
  std::vector<Real> a;  // a[k], k = 0..n
  std::vector<Real> b;  // b[k], k = 1..n (b[0] unused)
  Real mu0 = 0;
};

/// Three-term recurrence of the orthonormal Jacobi polynomials.
Recurrence jacobi_recurrence(int n, Real alpha, Real beta) {
  Recurrence r;
  r.a.resize(static_cast<std::size_t>(n) + 1);
  r.b.resize(static_cast<std::size_t>(n) + 1);
  const Real ab = alpha + beta;
  r.mu0 = std::exp((ab + 1) * std::log(Real(2)) + std::lgamma(alpha + 1) + std::lgamma(beta + 1) - std::lgamma(ab + 2));
  r.a[0] = (beta - alpha) / (ab + 2);
  for (int k = 1; k <= n; ++k) {
    const Real s = 2 * k + ab;
    r.a[static_cast<std::size_t>(k)] = (beta * beta - alpha * alpha) / (s * (s + 2));
    Real b2;
    if (k == 1) {
      b2 = 4 * (1 + alpha) * (1 + beta) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      b2 = 4 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1) * (s - 1));
    }
    r.b[static_cast<std::size_t>(k)] = std::sqrt(b2);
  }
  return r;
}

/// p_n(x), p_n'(x) and sum_{k<n} p_k(x)^2 for the orthonormal family.
struct Eval {
  Real p, dp, christoffel;
};

Eval evaluate(const Recurrence& r, int n, Real x) {
  Real p_prev = 0, p = 1 / std::sqrt(r.mu0);
  Real d_prev = 0, d = 0;
  Real sum = 0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const auto ku = static_cast<std::size_t>(k);
    const Real bk = k > 0 ? r.b[ku] : Real(0);
    const Real p_next = ((x - r.a[ku]) * p - bk * p_prev) / r.b[ku + 1];
    const Real d_next = ((x - r.a[ku]) * d + p - bk * d_prev) / r.b[ku + 1];
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d, sum};
}

QuadratureRule golub_welsch(int n, const Recurrence& r) {
  RVector diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = r.a[static_cast<std::size_t>(k)];
  for (int k = 0; k + 1 < n; ++k) sub(k) = r.b[static_cast<std::size_t>(k) + 1];
  Eigen::SelfAdjointEigenSolver<RMatrix> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  QuadratureRule rule;
  for (int i = n - 1; i >= 0; --i) {
    rule.nodes.push_back(es.eigenvalues()(i));
    const Real v0 = es.eigenvectors()(0, i);
    rule.weights.push_back(r.mu0 * v0 * v0);
  }
  return rule;
}

QuadratureRule build_rule(int n, Real alpha, Real beta) {
  const Recurrence r = jacobi_recurrence(n, alpha, beta);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  bool ok = true;
  for (int i = 1; i <= n && ok; ++i) {
    Real x = std::cos(kPi * (alpha / 2 + i - Real(0.25)) / (n + (1 + alpha + beta) / 2));
    for (int it = 0; it < 100; ++it) {
      const Eval e = evaluate(r, n, x);
      const Real step = e.p / e.dp;
      x -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<Real>::epsilon() * std::max<Real>(std::abs(x), 1e-3)) break;
    }
    const Eval e = evaluate(r, n, x);
    rule.nodes[static_cast<std::size_t>(i) - 1] = x;
    rule.weights[static_cast<std::size_t>(i) - 1] = 1 / e.christoffel;
    ok = std::isfinite(x) && std::abs(x) < 1 && (i == 1 || x < rule.nodes[static_cast<std::size_t>(i) - 2]);
  }
  if (ok) {
    Real total = 0;
    for (Real w : rule.weights) total += w;
    ok = std::abs(total - r.mu0) <= 1e-10 * r.mu0;
  }
  return ok ? rule : golub_welsch(n, r);
}

Real log_cosh(Real u) {
  const Real a = std::abs(u);
  return a + std::log1p(std::exp(-2 * a)) - std::log(Real(2));
}

}  // namespace

const QuadratureRule& gauss_jacobi_rule(int n, Real alpha, Real beta) {
  static std::mutex mutex;
  static std::map<std::tuple<int, Real, Real>, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, alpha, beta}];
  if (!slot) slot = std::make_unique<QuadratureRule>(build_rule(n, alpha, beta));
  return *slot;
}

Real bernstein_rho(Complex z) {
  Complex s = std::sqrt(z * z - Real(1));
  Real r1 = std::abs(z + s), r2 = std::abs(z - s);
  return std::max(r1, r2);
}

namespace {

struct Partial {
  Complex value;
  Real scale;
};

Partial apply_rule(const QuadratureRule& rule, const JacobiIntegrand& f) {
  ComplexSum sum;
  Real scale = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real x = rule.nodes[i];
    const Complex t = rule.weights[i] * f(x, 1 + x, 1 - x);
    sum.add(t);
    scale += std::abs(t);
  }
  return {sum.value(), scale};
}

/// Tanh-sinh terms at t = offset + k*step for integer k (both signs), until
/// the weights are negligible.
Partial de_terms(const JacobiIntegrand& f, Real alpha, Real beta, Real step, Real offset, Real t_max) {
  ComplexSum sum;
  Real scale = 0;
  const Real log_half_pi = std::log(kPi / 2);
  auto term = [&](Real t) {
    const Real u = kPi / 2 * std::sinh(t);
    const Real lc = log_cosh(u);
    const Real log_w = (beta - alpha) * u - (alpha + beta) * lc + log_half_pi + log_cosh(t) - 2 * lc;
    const Real one_plus = std::exp(u - lc);
    const Real one_minus = std::exp(-u - lc);
    const Real s = std::tanh(u);
    const Complex v = step * std::exp(log_w) * f(s, one_plus, one_minus);
    sum.add(v);
    scale += std::abs(v);
  };
  for (Real t = offset; t <= t_max; t += step) term(t);
  for (Real t = offset - step; t >= -t_max; t -= step) term(t);
  return {sum.value(), scale};
}

}  // namespace

QuadratureResult integrate_jacobi(const JacobiIntegrand& f, Real alpha, Real beta, Real rho,
                                  const QuadratureParams& params) {
  const int mult = std::max(params.node_multiplier, 1);
  const Real digits = -std::log(std::numeric_limits<Real>::epsilon());
  const Real predicted = rho > 1 ? digits / (2 * std::log(rho)) : std::numeric_limits<Real>::infinity();

  QuadratureResult res;
  if (predicted <= params.max_nodes / 2) {
    int n = params.min_nodes;
    while (n < predicted / 2) n *= 2;
    n *= mult;
    Partial prev = apply_rule(gauss_jacobi_rule(n, alpha, beta), f);
    while (2 * n <= params.max_nodes * mult) {
      n *= 2;
      Partial cur = apply_rule(gauss_jacobi_rule(n, alpha, beta), f);
      const Real change = std::abs(cur.value - prev.value);
      if (change <= params.tol * std::max(std::abs(cur.value), cur.scale)) {
        res.value = cur.value;
        res.nodes = n;
        res.change = change;
        res.scale = cur.scale;
        return res;
      }
      prev = cur;
    }
  }

  // Tanh-sinh: t_max where the bare weight is below 1e-30 of its peak.
  Real t_max = 3;
  while (t_max < 7) {
    const Real u = kPi / 2 * std::sinh(t_max);
    const Real lc = log_cosh(u);
    const Real log_w = std::max((beta - alpha) * u, (alpha - beta) * u) - (alpha + beta) * lc + log_cosh(t_max) - 2 * lc;
    if (log_w < -70) break;
    t_max += Real(0.25);
  }
  Real step = Real(0.5) / mult;
  Partial acc = de_terms(f, alpha, beta, step, 0, t_max);
  int points = static_cast<int>(2 * t_max / step) + 1;
  for (int level = 0; level < params.max_de_levels; ++level) {
    // Halve the step, reusing the old points: new sum = old/2 + odd midpoints.
    Partial mid = de_terms(f, alpha, beta, step, step / 2, t_max);
    step /= 2;
    points *= 2;
    Partial cur{acc.value / Real(2) + mid.value * Real(0.5), acc.scale / 2 + mid.scale / 2};
    const Real change = std::abs(cur.value - acc.value);
    acc = cur;
    if (change <= params.tol * std::max(std::abs(cur.value), cur.scale)) {
      res.value = cur.value;
      res.nodes = points;
      res.double_exponential = true;
      res.change = change;
      res.scale = cur.scale;
      return res;
    }
  }
  throw Error(Errc::QuadratureNonConvergence,
              "no convergence with " + std::to_string(points) + " tanh-sinh points");
}

}  // namespace gsh
