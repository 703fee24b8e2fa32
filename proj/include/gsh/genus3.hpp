#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gsh/pmgraph.hpp"

namespace gsh {

struct TwogonContribution {
  Rational value;
  /// 24 m^2 - 4 m n + n^2 with m = min(m1, m2), n = |m2 - m1|.
  Rational witness;
};

struct Genus3Report {
  Rational h;
  std::optional<std::pair<std::string, std::string>> h_type_pair;
  Rational ord_lower_bound;
  Rational local_bound;
  Rational phi_yamaki;
  bool local_bound_positive = false;
  bool phi_yamaki_nonnegative = false;
};

/// The unique pair {e, e'} whose complementary contraction is two genus-1
/// vertices joined by e and e'. Throws WrongGenus, EliminableVerticesPresent.
std::optional<std::pair<std::string, std::string>> find_h_type_pair(const PmGraph& graph);

/// min of the h-type pair lengths, or 0. Eliminable vertices are smoothed
/// first. Throws WrongGenus.
Rational h_invariant(const PmGraph& graph);

/// 2h + 2 delta_0 + 6 delta_1. Throws WrongGenus.
Rational ord_chi18_lower_bound(const PmGraph& graph);

/// Ind = (ord - 2 delta)/2. Throws InconsistentOrd when ord < 2 delta.
Rational horikawa_index_from_ord(const Rational& ord, const Rational& delta);

/// As above, additionally requiring Ind >= h + 2 delta_1 for the graph.
/// Throws InconsistentOrd.
Rational horikawa_index_from_ord(const Rational& ord, const PmGraph& graph);

/// B = h/9 + delta_0/9 + delta_1/3 - lambda. Throws WrongGenus.
Rational local_contribution_bound(const PmGraph& graph);

/// (m1+m2)/252 + min(m1,m2)/9 - (1/7) m1 m2/(m1+m2). Throws BadParameters.
TwogonContribution twogon_contribution(const Rational& m1, const Rational& m2);

/// Phi = 12 (B - delta_1/21). Throws WrongGenus.
Rational phi_yamaki(const PmGraph& graph);

Genus3Report genus3_report(const PmGraph& graph);

}  // namespace gsh
