#include <doctest.h>

#include "gsh/electrical.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace gsh;

TEST_SUITE("electrical") {
  TEST_CASE("resistance matches spanning-tree enumeration") {
    testgen::Rng rng(21);
    for (int k = 0; k < 40; ++k) {
      const PmGraph g = testgen::random_pm_graph(rng, 5, 4);
      const oracle::Network net = oracle::network_of(g);
      const auto r = resistance_matrix(g);
      for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        for (std::size_t j = 0; j < g.num_vertices(); ++j) {
          CHECK(r[i][j] == oracle::tree_resistance(net, static_cast<int>(i), static_cast<int>(j)));
        }
      }
    }
  }

  TEST_CASE("tau matches sampled profiles") {
    testgen::Rng rng(22);
    for (int k = 0; k < 25; ++k) {
      const PmGraph g = testgen::random_pm_graph(rng, 5, 4);
      CHECK(tau(g) == oracle::tau_by_sampling(oracle::network_of(g), 0));
    }
  }

  TEST_CASE("profile predicts resistance at an unsampled point") {
    testgen::Rng rng(23);
    for (int k = 0; k < 20; ++k) {
      const PmGraph g = testgen::random_pm_graph(rng, 5, 4);
      if (g.num_edges() == 0) continue;
      const auto& e = g.edges().back();
      const auto& p = g.vertices().front().id;
      const EdgeProfile prof = resistance_profile(g, p, e.id);
      const Rational t = e.length / 3;
      const PmGraph s = subdivide_edge(g, e.id, t);
      CHECK(prof(t) == effective_resistance(s, p, e.id + ".p"));
    }
  }

  TEST_CASE("closed forms") {
    const PmGraph circle = testgen::loop_graph(1, 6);
    CHECK(tau(circle) == Rational(1, 2));
    const PmGraph seg = testgen::segment_graph(2, 1, 8);
    CHECK(tau(seg) == 2);
    CHECK(effective_resistance(seg, "x", "y") == 8);
    const PmGraph t = testgen::two_gon(3, 1, 1, 1);
    const InvariantReport rep = invariant_report(t);
    CHECK(rep.tau == Rational(1, 6));
    CHECK(rep.theta == 4);
    CHECK(rep.lambda == Rational(2, 7));
    CHECK(rep.mu == 2);
  }

  TEST_CASE("phi and height jump") {
    CHECK(phi_from_lambda_epsilon(3, Rational(2, 7), 0, 2) == 21 * (Rational(2, 7) - Rational(1, 6)));
    CHECK_ERRC(phi_from_lambda_epsilon(1, 0, 0, 0), Errc::GenusTooSmall);
    CHECK(height_jump_twogon(3, 1, 1, 1) == 2);
    CHECK_ERRC(height_jump_twogon(3, 1, 0, 1), Errc::BadParameters);
    CHECK_ERRC(height_jump_twogon(3, 3, 1, 1), Errc::BadParameters);
    CHECK_ERRC(effective_resistance(testgen::two_gon(3, 1, 1, 1), "x", "q"), Errc::UnknownVertex);
  }
}
