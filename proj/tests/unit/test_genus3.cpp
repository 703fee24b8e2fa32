#include <doctest.h>

#include "gsh/electrical.hpp"
#include "gsh/genus3.hpp"
#include "helpers.hpp"
#include "random_graphs.hpp"

using namespace gsh;

TEST_SUITE("genus3") {
  TEST_CASE("h-type pair of the two-gon") {
    const PmGraph g = testgen::two_gon(3, 1, 3, 5);
    const auto pair = find_h_type_pair(g);
    REQUIRE(pair.has_value());
    CHECK(pair->first == "e1");
    CHECK(pair->second == "e2");
    CHECK(h_invariant(g) == 3);
    CHECK(ord_chi18_lower_bound(g) == 2 * 3 + 2 * 8);
  }

  TEST_CASE("h is read after smoothing") {
    const PmGraph g = testgen::two_gon(3, 1, 3, 5);
    const PmGraph s = subdivide_edge(g, "e2", 2);
    CHECK_ERRC(find_h_type_pair(s), Errc::EliminableVerticesPresent);
    CHECK(h_invariant(s) == 3);
  }

  TEST_CASE("trees have no h-type pair") {
    testgen::Rng rng(31);
    for (int k = 0; k < 20; ++k) {
      const PmGraph t = testgen::random_tree(rng, 3);
      CHECK(h_invariant(t) == 0);
      CHECK(phi_yamaki(t) == 0);
    }
  }

  TEST_CASE("two-gon contribution") {
    for (int m1 = 1; m1 <= 12; ++m1) {
      for (int m2 = 1; m2 <= 12; ++m2) {
        const TwogonContribution c = twogon_contribution(m1, m2);
        CHECK(c.value * 252 * (m1 + m2) == c.witness);
        CHECK(c.value == local_contribution_bound(testgen::two_gon(3, 1, m1, m2)));
      }
    }
    CHECK_ERRC(twogon_contribution(0, 1), Errc::BadParameters);
  }

  TEST_CASE("Horikawa index") {
    CHECK(horikawa_index_from_ord(10, 2) == 3);
    CHECK_ERRC(horikawa_index_from_ord(3, 2), Errc::InconsistentOrd);
    const PmGraph g = testgen::two_gon(3, 1, 1, 1);
    CHECK(horikawa_index_from_ord(6, g) == 1);
    CHECK_ERRC(horikawa_index_from_ord(Rational(9, 2), g), Errc::InconsistentOrd);
  }

  TEST_CASE("genus checks") {
    const PmGraph g = testgen::two_gon(4, 1, 1, 1);
    CHECK_ERRC(h_invariant(g), Errc::WrongGenus);
    CHECK_ERRC(genus3_report(g), Errc::WrongGenus);
    const Genus3Report r = genus3_report(testgen::two_gon(3, 1, 1, 2));
    CHECK(r.local_bound_positive);
    CHECK(r.phi_yamaki_nonnegative);
  }
}
