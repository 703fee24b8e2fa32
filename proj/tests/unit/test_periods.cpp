#include <doctest.h>

#include <cmath>

#include "gsh/periods.hpp"
#include "gsh/quadrature.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gsh;

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Jacobi moments") {
    for (auto [alpha, beta] : {std::pair<Real, Real>{-0.5, -0.75}, {-0.25, 0.0}, {0.0, 0.0}, {1.5, -0.5}}) {
      const QuadratureRule& rule = gauss_jacobi_rule(20, alpha, beta);
      Real sum = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(1 + rule.nodes[i], 3);
      // int (1-x)^a (1+x)^(b+3) dx = 2^(a+b+4) B(a+1, b+4)
      const Real exact = std::exp((alpha + beta + 4) * std::log(Real(2)) + std::lgamma(alpha + 1) + std::lgamma(beta + 4) -
                                  std::lgamma(alpha + beta + 5));
      CHECK(std::abs(sum - exact) < 1e-13 * exact);
    }
  }

  TEST_CASE("tanh-sinh agrees with Gauss-Jacobi") {
    auto f = [](Real s, Real, Real) { return Complex(std::cos(3 * s), std::sin(s)); };
    const QuadratureResult gj = integrate_jacobi(f, -0.75, -0.5, 10, {});
    QuadratureParams de;
    de.max_nodes = 16;
    const QuadratureResult ts = integrate_jacobi(f, -0.75, -0.5, 1.0001, de);
    CHECK_FALSE(gj.double_exponential);
    CHECK(ts.double_exponential);
    CHECK(std::abs(gj.value - ts.value) < 1e-12);
  }

  TEST_CASE("non-convergence is reported") {
    QuadratureParams p;
    p.max_nodes = 16;
    p.max_de_levels = 1;
    auto f = [](Real s, Real, Real) { return Complex(std::cos(400 * s)); };
    CHECK_ERRC(integrate_jacobi(f, 0, 0, 1.0001, p), Errc::QuadratureNonConvergence);
  }
}

TEST_SUITE("periods") {
  TEST_CASE("curve shapes") {
    CHECK_ERRC(guardia_curve(Complex(0)), Errc::DegenerateParameter);
    CHECK_ERRC(curve_from_n(Complex(1)), Errc::DegenerateParameter);
    CHECK_ERRC(SuperellipticCurve::make(3, {Complex(0), Complex(1), Complex(2), Complex(3)}), Errc::UnsupportedCurve);
    CHECK_ERRC(SuperellipticCurve::make(2, {Complex(0), Complex(0), Complex(1)}), Errc::BadParameters);
    const SuperellipticCurve d = curve_from_n(Complex(2));
    CHECK(d.genus() == 3);
    CHECK(d.infinity_is_branch_point());
    CHECK(holomorphic_basis(d).size() == 3);
    const SuperellipticCurve m = unramified_at_infinity_model(d);
    CHECK_FALSE(m.infinity_is_branch_point());
    CHECK(m.genus() == 3);
  }

  TEST_CASE("valuations and monodromy") {
    const SuperellipticCurve d = guardia_curve(Complex(2));
    for (const auto& w : holomorphic_basis(d)) {
      for (int i = 0; i <= d.degree(); ++i) CHECK(differential_valuation(d, w, i) >= 0);
    }
    const auto mono = local_monodromy(d);
    CHECK(mono.size() == 4);
    int total = 0;
    for (int s : mono) total += s;
    CHECK(total % 4 == 0);
    CHECK(monodromy_cycle_length(4, 2) == 2);
    const SuperellipticCurve h = SuperellipticCurve::make(2, {Complex(0), Complex(1), Complex(2), Complex(3), Complex(4), Complex(5), Complex(6)});
    CHECK(h.genus() == 3);
    CHECK(holomorphic_basis(h).size() == 3);
  }

  TEST_CASE("elliptic curves against the AGM") {
    for (auto e : {std::array<long double, 3>{1, 0, -1}, {3, 1, 0}, {7, 2, -1.5L}, {10, 9.5L, 0}}) {
      const SuperellipticCurve c = SuperellipticCurve::make(2, {Complex(static_cast<Real>(e[0])), Complex(static_cast<Real>(e[1])),
                                                                Complex(static_cast<Real>(e[2]))});
      const SiegelPoint p = small_period_matrix(c);
      const auto ref = oracle::reduce_upper_half_plane(oracle::elliptic_tau_real_roots(e[0], e[1], e[2]));
      const auto got = oracle::reduce_upper_half_plane({p.omega()(0, 0).real(), p.omega()(0, 0).imag()});
      CHECK(std::abs(got - ref) < 1e-10L);
    }
  }

  TEST_CASE("period matrices are Riemann matrices") {
    for (Complex n : {Complex(2), Complex(-1), Complex(5), Complex(1000), Complex(3, 1)}) {
      const PeriodData data = big_periods(curve_from_n(n));
      CHECK(data.intersection == -IMatrix(data.intersection.transpose()));
      const SmallPeriodResult r = small_period_matrix(data);
      CHECK(r.asymmetry < 1e-10);
      CHECK(Eigen::LLT<RMatrix>(r.omega.im()).info() == Eigen::Success);
    }
  }

  TEST_CASE("frozen regression value for kappa = 1/2") {
    const SiegelPoint p = small_period_matrix(curve_from_n(Complex(2)));
    CHECK(std::abs(log_hodge_norm_chi18_prime(p) - Real(70.075630818661566)) < 1e-9);
    const SiegelPoint r = siegel_reduce(p).omega;
    CHECK(std::abs(r.omega()(0, 0) - Complex(0, 1)) < 1e-10);
    CHECK(std::abs(r.omega()(1, 2) - Complex(0, 0.5)) < 1e-10);
    const Real expected_det = 1 * (1 * 1 - 0.25) - 0.5 * (0.5 - 0.25) + 0.5 * (0.25 - 0.5);
    CHECK(std::abs(r.im().determinant() - expected_det) < 1e-10);
  }

  TEST_CASE("the two models of kappa give the same norm") {
    const Real a = log_hodge_norm_chi18_prime(small_period_matrix(curve_from_n(Complex(2))));
    const Real b = log_hodge_norm_chi18_prime(small_period_matrix(curve_from_n(Complex(-1))));
    CHECK(std::abs(a - b) < 1e-9);
  }
}
