#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

Network network_of(const gsh::PmGraph& graph) {
  Network net;
  net.vertices = static_cast<int>(graph.num_vertices());
  for (const auto& e : graph.edges()) {
    net.edges.push_back({static_cast<int>(e.u), static_cast<int>(e.v), e.length});
  }
  return net;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

void enumerate(const Network& net, std::size_t next, int needed, std::vector<int> parent, const Rational& weight,
               Rational& total) {
  if (needed == 0) {
    total += weight;
    return;
  }
  if (net.edges.size() - next < static_cast<std::size_t>(needed)) return;
  const Edge& e = net.edges[next];
  const int a = find(parent, e.u), b = find(parent, e.v);
  if (a != b) {
    std::vector<int> joined = parent;
    joined[static_cast<std::size_t>(a)] = b;
    enumerate(net, next + 1, needed - 1, std::move(joined), weight / e.length, total);
  }
  enumerate(net, next + 1, needed, std::move(parent), weight, total);
}

}  // namespace

Rational weighted_tree_count(const Network& net) {
  std::vector<int> parent(static_cast<std::size_t>(net.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  Rational total = 0;
  enumerate(net, 0, net.vertices - 1, parent, Rational(1), total);
  return total;
}

Rational tree_resistance(const Network& net, int p, int q) {
  if (p == q) return 0;
  Network merged;
  merged.vertices = net.vertices - 1;
  auto relabel = [&](int x) {
    if (x == q) x = p;
    return x > q ? x - 1 : x;
  };
  for (const auto& e : net.edges) {
    const int u = relabel(e.u), v = relabel(e.v);
    if (u != v) merged.edges.push_back({u, v, e.length});
  }
  return weighted_tree_count(merged) / weighted_tree_count(net);
}

Rational tau_by_sampling(const Network& net, int base) {
  Rational total = 0;
  for (std::size_t k = 0; k < net.edges.size(); ++k) {
    const Edge& e = net.edges[k];
    const Rational l = e.length;
    auto r_at = [&](const Rational& t) -> Rational {
      if (t == 0) return tree_resistance(net, base, e.u);
      if (t == l) return tree_resistance(net, base, e.v);
      Network split;
      split.vertices = net.vertices + 1;
      for (std::size_t j = 0; j < net.edges.size(); ++j) {
        if (j != k) split.edges.push_back(net.edges[j]);
      }
      split.edges.push_back({e.u, net.vertices, t});
      split.edges.push_back({net.vertices, e.v, l - t});
      return tree_resistance(split, base, net.vertices);
    };
    const Rational r0 = r_at(0), r1 = r_at(l / 4), r2 = r_at(l / 2), r3 = r_at(3 * l / 4), r4 = r_at(l);
    // r(t) = a t^2 + b t + c through t = 0, l/2, l.
    const Rational c = r0;
    const Rational a = 2 * (r4 - 2 * r2 + r0) / (l * l);
    const Rational b = (r4 - r0) / l - a * l;
    auto r = [&](const Rational& t) { return a * t * t + b * t + c; };
    if (r(l / 4) != r1 || r(3 * l / 4) != r3) throw std::logic_error("resistance samples are not quadratic");
    // int_0^l (2 a t + b)^2 dt
    total += 4 * a * a * l * l * l / 3 + 2 * a * b * l * l + b * b * l;
  }
  return total / 4;
}

C theta_series(int a, int b, C tau) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const C i(0, 1);
  C sum = 0;
  for (int n = -60; n <= 60; ++n) {
    const long double v = n + a / 2.0L;
    sum += std::exp(i * pi * v * v * tau + i * pi * v * static_cast<long double>(b));
  }
  return sum;
}

long double agm(long double a, long double b) {
  for (int k = 0; k < 100 && std::abs(a - b) > 1e-19L * std::abs(a); ++k) {
    const long double m = (a + b) / 2;
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

C elliptic_tau_real_roots(long double e1, long double e2, long double e3) {
  const long double m1 = agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2));
  const long double m2 = agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3));
  return C(0, m1 / m2);
}

C reduce_upper_half_plane(C tau) {
  for (int it = 0; it < 1000; ++it) {
    tau -= std::round(tau.real());
    if (std::norm(tau) < 1 - 1e-15L) {
      tau = -1.0L / tau;
    } else {
      break;
    }
  }
  return tau;
}

}  // namespace oracle
