#include <doctest.h>

#include "gsh/assembly.hpp"
#include "gsh/assembly_io.hpp"
#include "gsh/genus3.hpp"
#include "gsh/graph_io.hpp"
#include "helpers.hpp"
#include "random_graphs.hpp"

using namespace gsh;

namespace {

FinitePlaceRecord place(const std::string& label, const Rational& log_nv, const Rational& ord, const Rational& lambda) {
  FinitePlaceRecord p;
  p.label = label;
  p.log_nv = Mixed::of(log_nv);
  p.ord = ord;
  p.lambda = lambda;
  return p;
}

}  // namespace

TEST_SUITE("assembly") {
  TEST_CASE("mixed arithmetic") {
    const Mixed a = Mixed::of(Rational(1, 3)), b = Mixed::of(Real(0.5));
    const Mixed s = a + b;
    CHECK(s.exact == Rational(1, 3));
    CHECK(s.approx == doctest::Approx(0.5));
    CHECK(s.inexact);
    CHECK_FALSE((a * a).inexact);
    CHECK((a * b).approx == doctest::Approx(1.0 / 6));
    CHECK(to_string(a * Rational(3)) == "1");
  }

  TEST_CASE("Gross-Schoen height") {
    PlaceTable t;
    CHECK(gs_height(t).value.exact == 0);
    t.finite.push_back(place("2", 1, 6, Rational(2, 7)));
    const GsHeight h = gs_height(t);
    CHECK(h.value.exact == 1);
    CHECK_FALSE(h.value.inexact);
    t.genus = 4;
    CHECK_ERRC(gs_height(t), Errc::WrongGenus);
    t.genus = 3;
    t.finite[0].ord.reset();
    try {
      gs_height(t);
      FAIL("expected MissingField");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MissingField);
      CHECK(std::string(e.what()).find("'2'") != std::string::npos);
      CHECK(std::string(e.what()).find("ord") != std::string::npos);
    }
  }

  TEST_CASE("monotone in ord and homogeneous in log Nv") {
    PlaceTable t;
    t.finite.push_back(place("a", 2, 6, Rational(2, 7)));
    t.finite.push_back(place("b", Rational(1, 3), 10, 1));
    const Mixed base = gs_height(t).value;
    PlaceTable up = t;
    *up.finite[1].ord += 1;
    CHECK(gs_height(up).value.exact > base.exact);
    PlaceTable twice = t;
    for (auto& p : twice.finite) p.log_nv = p.log_nv * Rational(2);
    CHECK(gs_height(twice).value.exact == 2 * base.exact);
  }

  TEST_CASE("Zhang identity") {
    CHECK(zhang_identity(3, Mixed{}, {}, 1, Mixed{}).exact == 0);
    for (int g = 2; g <= 6; ++g) {
      CHECK(zhang_identity(g, Mixed::of(Rational(2 * g - 2, 2 * g + 1)), {}, 1, Mixed{}).exact == 1);
    }
    const Mixed at_zero = zhang_identity(3, Mixed::of(Rational(1)), {}, 2, Mixed::of(Rational(0)));
    const Mixed positive = zhang_identity(3, Mixed::of(Rational(1)), {}, 2, Mixed::of(Rational(1, 100)));
    CHECK(positive.exact > at_zero.exact);
    CHECK_ERRC(zhang_identity(1, Mixed{}, {}, 1, Mixed{}), Errc::WrongGenus);
  }

  TEST_CASE("Faltings routes") {
    const std::vector<WeightedValue> lambda = {{Mixed::of(Rational(1)), Mixed::of(Rational(2))}};
    CHECK(faltings_route_height(3, Mixed::of(Rational(2)), lambda).exact == 0);
    CHECK(faltings_route_height(3, Mixed::of(Rational(3)), lambda).exact == 21);
    CHECK_ERRC(faltings_route_height(1, Mixed{}, {}), Errc::WrongGenus);
    PlaceTable t;
    CHECK(faltings_from_chi18(t).exact == 0);
    FinitePlaceRecord p;
    p.label = "p";
    p.ord = 18;
    t.finite.push_back(p);
    CHECK(faltings_from_chi18(t).exact == 1);
    InfinitePlaceRecord s;
    s.label = "s";
    t.infinite.push_back(s);
    CHECK_ERRC(faltings_from_chi18(t), Errc::MissingField);
  }

  TEST_CASE("Noether residual") {
    const std::vector<WeightedValue> delta = {{Mixed::of(Rational(3)), Mixed::of(Rational(1))}};
    CHECK(noether_residual(Mixed::of(Rational(1)), Mixed::of(Rational(9)), delta).exact == 0);
    CHECK(noether_residual(Mixed::of(Rational(1)), Mixed::of(Rational(10)), delta).exact == -1);
    PlaceTable t;
    t.faltings_degree = Mixed::of(Rational(1));
    CHECK_ERRC(noether_check(t), Errc::MissingField);
  }

  TEST_CASE("conjecture report") {
    PlaceTable t;
    FinitePlaceRecord p;
    p.label = "p";
    p.phi = 7;
    t.finite.push_back(p);
    t.omega_hat_sq = Mixed::of(Rational(100));
    ConjectureReport r = conjecture_report(t);
    CHECK(r.conjectural == BoundStatus::Satisfied);
    CHECK(r.unconditional == BoundStatus::Satisfied);
    t.omega_hat_sq = Mixed::of(Rational(0));
    r = conjecture_report(t);
    CHECK(r.conjectural == BoundStatus::Violated);
    t.omega_hat_sq = Mixed::of(Rational(4));
    CHECK(conjecture_report(t).conjectural == BoundStatus::Tight);
    t.omega_hat_sq = Mixed::of(Real(4));
    CHECK(conjecture_report(t).conjectural == BoundStatus::Tight);
    t.omega_hat_sq.reset();
    CHECK_ERRC(conjecture_report(t), Errc::MissingField);
  }

  TEST_CASE("graph autofill") {
    PlaceTable t;
    FinitePlaceRecord odd;
    odd.label = "odd";
    odd.graph = testgen::two_gon(3, 1, 1, 1);
    t.finite.push_back(odd);
    FinitePlaceRecord two;
    two.label = "2";
    RawGraph raw;
    raw.vertices = {{"a", 1}, {"b", 1}, {"c", 1}, {"o", 0}};
    raw.edges = {{"x", "o", "a", 2}, {"y", "o", "b", 3}, {"z", "o", "c", 4}};
    two.graph = PmGraph::validate(raw);
    t.finite.push_back(two);

    const PlaceTable f = graph_autofill(t);
    CHECK(*f.finite[0].lambda == Rational(2, 7));
    CHECK(*f.finite[0].ord_lower_bound == 6);
    CHECK(*f.finite[0].h == 1);
    CHECK(*f.finite[1].lambda == Rational(2 * 9, 7));
    CHECK(*f.finite[1].delta == 9);

    PlaceTable bad = t;
    bad.finite[0].lambda = Rational(1, 7);
    CHECK_ERRC(graph_autofill(bad), Errc::FieldConflict);
    bad = t;
    bad.finite[0].ord = 5;
    CHECK_ERRC(graph_autofill(bad), Errc::FieldConflict);
    bad = t;
    bad.genus = 4;
    CHECK_ERRC(graph_autofill(bad), Errc::WrongGenus);
  }

  TEST_CASE("lower-bound contribution of the two-gon") {
    PlaceTable t;
    FinitePlaceRecord p;
    p.label = "v";
    p.graph = testgen::two_gon(3, 1, 2, 5);
    p.log_nv = Mixed::of(Rational(3));
    t.finite.push_back(p);
    t = graph_autofill(t);
    t.finite[0].ord = *t.finite[0].ord_lower_bound + 4;
    const GsHeight h = gs_height(t);
    const Rational b = local_contribution_bound(*t.finite[0].graph);
    CHECK(h.places[0].at_lower_bound->exact == 21 * b * 3);
    CHECK(h.places[0].value.exact > h.places[0].at_lower_bound->exact);
  }

  TEST_CASE("json round trip") {
    PlaceTable t;
    t.finite.push_back(place("2", 1, 6, Rational(2, 7)));
    t.finite.back().log_nv = Mixed::of(Real(0.6931471805599453));
    t.finite.back().graph = testgen::two_gon(3, 1, 1, 1);
    InfinitePlaceRecord s;
    s.label = "sigma";
    s.log_norm_chi18 = 70.1;
    s.lambda = 0.25;
    t.infinite.push_back(s);
    t.omega_hat_sq = Mixed::of(Rational(1, 2));
    const PlaceTable u = place_table_from_json(place_table_to_json(t));
    CHECK(place_table_to_json(u) == place_table_to_json(t));
    CHECK(u.finite[0].log_nv.inexact);
    CHECK(*u.finite[0].lambda == Rational(2, 7));
    CHECK_ERRC(place_table_from_json(nlohmann::json::parse(R"({"finite":[{"label":"x"}]})")), Errc::ParseError);
    CHECK_ERRC(check_table(place_table_from_json(nlohmann::json::parse(R"({"finite":[{"label":"x","log_nv":"0"}]})"))),
               Errc::BadParameters);
  }

  TEST_CASE("period autofill") {
    PlaceTable t;
    InfinitePlaceRecord s;
    s.label = "sigma";
    CMatrix omega = CMatrix::Identity(3, 3) * Complex(0, 1.1);
    omega(0, 1) = omega(1, 0) = Complex(0.2, 0.3);
    omega(1, 2) = omega(2, 1) = Complex(-0.1, 0.25);
    s.omega = omega;
    t.infinite.push_back(s);
    const PlaceTable f = period_autofill(t);
    CHECK(std::abs(*f.infinite[0].log_norm_chi18 - log_hodge_norm_chi18_prime(SiegelPoint::make(omega))) < 1e-12);
    t.infinite[0].log_norm_chi18 = 0;
    CHECK_ERRC(period_autofill(t), Errc::FieldConflict);
  }

  TEST_CASE("line fit") {
    const LinearFit f = fit_line({0, 1, 2}, {1, 3, 5});
    CHECK(f.slope == doctest::Approx(2));
    CHECK(f.intercept == doctest::Approx(1));
    CHECK(f.max_residual < 1e-12);
    CHECK_ERRC(fit_line({1}, {1}), Errc::BadParameters);
    CHECK_ERRC(fit_line({1, 1}, {1, 2}), Errc::BadParameters);
  }

  TEST_CASE("sweep is deterministic and isolates failing rows") {
    const std::vector<Real> ns = {10, 100};
    CHECK(sweep_csv(kappa_sweep(ns)) == sweep_csv(kappa_sweep(ns)));
    CHECK_ERRC(kappa_sweep({1.5}), Errc::BadParameters);

    // The smallest theta constant decays like n^(-1/2), so a coarse zero
    // threshold rejects the large-n row only.
    EvalParams coarse;
    coarse.zero_tol = 1e-3;
    const SweepResult r = kappa_sweep({10, 1e6}, coarse);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].ok);
    CHECK_FALSE(r.rows[1].ok);
    CHECK(r.rows[0].f == kappa_sweep({10}).rows[0].f);
    CHECK(sweep_csv(r).find("failed") != std::string::npos);
  }
}
