#include "gsh/electrical.hpp"

#include <set>
#include <string>

#include "gsh/error.hpp"

namespace gsh {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse over the rationals. The grounded Laplacian of a
/// connected graph is nonsingular, so a zero pivot column is a bug.
Matrix exact_inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular grounded Laplacian");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Inverse of the Laplacian with row/column `ground` removed, embedded back
/// as an n x n matrix with zeros in the grounded row and column.
Matrix grounded_green(const PmGraph& graph, std::size_t ground) {
  const std::size_t n = graph.num_vertices();
  Matrix lap(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    const Rational c = 1 / e.length;
    lap[e.u][e.u] += c;
    lap[e.v][e.v] += c;
    lap[e.u][e.v] -= c;
    lap[e.v][e.u] -= c;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != ground) keep.push_back(i);
  }
  Matrix red(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) red[i][j] = lap[keep[i]][keep[j]];
  }
  Matrix inv = exact_inverse(std::move(red));
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out[keep[i]][keep[j]] = inv[i][j];
  }
  return out;
}

/// The edge of `after` whose id does not occur in `before`.
std::string added_edge(const PmGraph& before, const PmGraph& after) {
  for (const auto& e : after.edges()) {
    if (!before.has_edge(e.id)) return e.id;
  }
  throw std::logic_error("subdivision added no edge");
}

std::size_t added_vertex(const PmGraph& before, const PmGraph& after) {
  for (std::size_t i = 0; i < after.num_vertices(); ++i) {
    if (!before.has_vertex(after.vertices()[i].id)) return i;
  }
  throw std::logic_error("subdivision added no vertex");
}

Rational tau_from_profile(const EdgeProfile& p, const Rational& l) {
  return (4 * p.a * p.a * l * l * l / 3 + 2 * p.a * p.b * l * l + p.b * p.b * l) / 4;
}

}  // namespace

std::vector<std::vector<Rational>> resistance_matrix(const PmGraph& graph) {
  const std::size_t n = graph.num_vertices();
  Matrix green = grounded_green(graph, 0);
  Matrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = green[i][i] + green[j][j] - 2 * green[i][j];
  }
  return r;
}

Rational effective_resistance(const PmGraph& graph, std::string_view p, std::string_view q) {
  const std::size_t ip = graph.vertex_index(p);
  const std::size_t iq = graph.vertex_index(q);
  if (ip == iq) return Rational(0);
  return grounded_green(graph, ip)[iq][iq];
}

EdgeProfile resistance_profile(const PmGraph& graph, std::string_view p, std::string_view edge_id) {
  graph.vertex_index(p);
  const Edge& e = graph.edges()[graph.edge_index(edge_id)];
  const Rational len = e.length;
  const Rational quarter = len / 4;

  // Insert points at l/4 and l/2, then read every sample off one solve.
  PmGraph g1 = subdivide_edge(graph, edge_id, quarter);
  const std::size_t x_quarter = added_vertex(graph, g1);
  const std::string tail = added_edge(graph, g1);
  PmGraph g2 = subdivide_edge(g1, tail, len / 2 - quarter);
  const std::size_t x_half = added_vertex(g1, g2);

  const std::size_t base = g2.vertex_index(p);
  const Matrix green = grounded_green(g2, base);
  auto r = [&](std::size_t x) { return green[x][x]; };

  const Rational r0 = r(g2.vertex_index(graph.vertices()[e.u].id));
  const Rational r1 = r(x_half);
  const Rational r2 = r(g2.vertex_index(graph.vertices()[e.v].id));
  const Rational rq = r(x_quarter);

  const Rational h = len / 2;
  EdgeProfile prof{(r2 - 2 * r1 + r0) / (2 * h * h), (4 * r1 - r2 - 3 * r0) / (2 * h), r0};
  if (prof(quarter) != rq) {
    throw Error(Errc::ProfileInterpolationMismatch,
                "edge '" + e.id + "': quadratic predicts " + to_string(prof(quarter)) + " at l/4, solve gives " +
                    to_string(rq));
  }
  return prof;
}

Rational tau(const PmGraph& graph) { return tau(graph, graph.vertices().front().id); }

Rational tau(const PmGraph& graph, std::string_view base) {
  Rational total = 0;
  for (const auto& e : graph.edges()) total += tau_from_profile(resistance_profile(graph, base, e.id), e.length);
  return total;
}

Rational theta_invariant(const PmGraph& graph) {
  const auto r = resistance_matrix(graph);
  const auto& k = graph.canonical_divisor();
  Rational total = 0;
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    if (k[i] == 0) continue;
    for (std::size_t j = 0; j < graph.num_vertices(); ++j) total += k[i] * k[j] * r[i][j];
  }
  return total;
}

namespace {

Rational lambda_from(int g, const Rational& tau_v, const Rational& theta_v, const Rational& delta) {
  return (6 * (g - 1) * tau_v + theta_v / 2 + (g + 1) * delta / 2) / (8 * g + 4);
}

Rational mu_from(int g, const Rational& lambda, const DeltaVector& d) {
  Rational mu = (8 * g + 4) * lambda - g * d.at_or_zero(0);
  for (std::size_t h = 1; h < d.by_type.size(); ++h) mu -= 4 * static_cast<int>(h) * (g - static_cast<int>(h)) * d[h];
  return mu;
}

}  // namespace

Rational lambda_invariant(const PmGraph& graph) {
  return lambda_from(graph.genus(), tau(graph), theta_invariant(graph), graph.volume());
}

Rational phi_from_lambda_epsilon(int g, const Rational& lambda, const Rational& epsilon, const Rational& delta) {
  if (g < 2) throw Error(Errc::GenusTooSmall, "phi needs g >= 2, got " + std::to_string(g));
  return (lambda - (delta + epsilon) / 12) * 6 * (2 * g + 1) / (g - 1);
}

Rational slope_mu(const PmGraph& graph) {
  return mu_from(graph.genus(), lambda_invariant(graph), delta_vector(graph));
}

Rational height_jump_twogon(int g, int h, const Rational& m1, const Rational& m2) {
  if (g < 2 || h < 0 || h > g - 1 || m1 <= 0 || m2 <= 0) {
    throw Error(Errc::BadParameters, "need g >= 2, 0 <= h <= g-1, m1, m2 > 0");
  }
  return 4 * m1 * m2 / (m1 + m2) * (g - h - 1) * h;
}

InvariantReport invariant_report(const PmGraph& graph) {
  InvariantReport rep;
  rep.genus = graph.genus();
  rep.delta = delta_vector(graph);
  rep.tau = tau(graph);
  rep.theta = theta_invariant(graph);
  rep.lambda = lambda_from(rep.genus, rep.tau, rep.theta, rep.delta.total);
  rep.mu = mu_from(rep.genus, rep.lambda, rep.delta);
  return rep;
}

}  // namespace gsh
