#include "gsh/genus3.hpp"

#include <stdexcept>

#include "gsh/electrical.hpp"
#include "gsh/error.hpp"

namespace gsh {

namespace {

void require_genus3(const PmGraph& graph) {
  if (graph.genus() != 3) throw Error(Errc::WrongGenus, "expected genus 3, got " + std::to_string(graph.genus()));
}

bool is_h_type(const PmGraph& graph, const Edge& e1, const Edge& e2) {
  if (e1.is_loop() || e2.is_loop()) return false;
  PmGraph r = restrict_to(graph, {e1.id, e2.id});
  if (r.num_vertices() != 2) return false;
  const auto& a = r.edges()[0];
  const auto& b = r.edges()[1];
  bool joined = !a.is_loop() && !b.is_loop();
  return joined && r.vertices()[0].genus == 1 && r.vertices()[1].genus == 1;
}

}  // namespace

std::optional<std::pair<std::string, std::string>> find_h_type_pair(const PmGraph& graph) {
  require_genus3(graph);
  if (has_eliminable_vertices(graph)) {
    throw Error(Errc::EliminableVerticesPresent, "smooth eliminable vertices before searching for h-type pairs");
  }
  std::optional<std::pair<std::string, std::string>> found;
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!is_h_type(graph, edges[i], edges[j])) continue;
      if (found) throw std::logic_error("two distinct h-type pairs in a genus-3 graph");
      found = std::make_pair(edges[i].id, edges[j].id);
    }
  }
  return found;
}

Rational h_invariant(const PmGraph& graph) {
  require_genus3(graph);
  PmGraph smooth = smooth_eliminable(graph);
  auto pair = find_h_type_pair(smooth);
  if (!pair) return Rational(0);
  return min(smooth.edges()[smooth.edge_index(pair->first)].length,
             smooth.edges()[smooth.edge_index(pair->second)].length);
}

Rational ord_chi18_lower_bound(const PmGraph& graph) {
  require_genus3(graph);
  DeltaVector d = delta_vector(graph);
  return 2 * h_invariant(graph) + 2 * d.at_or_zero(0) + 6 * d.at_or_zero(1);
}

Rational horikawa_index_from_ord(const Rational& ord, const Rational& delta) {
  if (ord < 2 * delta) {
    throw Error(Errc::InconsistentOrd, "ord " + to_string(ord) + " < 2 delta = " + to_string(Rational(2 * delta)));
  }
  return (ord - 2 * delta) / 2;
}

Rational horikawa_index_from_ord(const Rational& ord, const PmGraph& graph) {
  require_genus3(graph);
  DeltaVector d = delta_vector(graph);
  Rational ind = horikawa_index_from_ord(ord, d.total);
  Rational floor_bound = h_invariant(graph) + 2 * d.at_or_zero(1);
  if (ind < floor_bound) {
    throw Error(Errc::InconsistentOrd,
                "Ind = " + to_string(ind) + " below h + 2 delta_1 = " + to_string(floor_bound));
  }
  return ind;
}

Rational local_contribution_bound(const PmGraph& graph) {
  require_genus3(graph);
  DeltaVector d = delta_vector(graph);
  return h_invariant(graph) / 9 + d.at_or_zero(0) / 9 + d.at_or_zero(1) / 3 - lambda_invariant(graph);
}

TwogonContribution twogon_contribution(const Rational& m1, const Rational& m2) {
  if (m1 <= 0 || m2 <= 0) throw Error(Errc::BadParameters, "thicknesses must be positive");
  const Rational s = m1 + m2;
  const Rational m = min(m1, m2);
  const Rational n = m1 > m2 ? Rational(m1 - m2) : Rational(m2 - m1);
  return TwogonContribution{s / 252 + m / 9 - m1 * m2 / (7 * s), 24 * m * m - 4 * m * n + n * n};
}

Rational phi_yamaki(const PmGraph& graph) {
  require_genus3(graph);
  return 12 * (local_contribution_bound(graph) - delta_vector(graph).at_or_zero(1) / 21);
}

Genus3Report genus3_report(const PmGraph& graph) {
  require_genus3(graph);
  Genus3Report rep;
  PmGraph smooth = smooth_eliminable(graph);
  rep.h_type_pair = find_h_type_pair(smooth);
  rep.h = h_invariant(graph);
  rep.ord_lower_bound = ord_chi18_lower_bound(graph);
  rep.local_bound = local_contribution_bound(graph);
  rep.phi_yamaki = phi_yamaki(graph);
  rep.local_bound_positive = rep.local_bound > 0;
  rep.phi_yamaki_nonnegative = rep.phi_yamaki >= 0;
  return rep;
}

}  // namespace gsh
