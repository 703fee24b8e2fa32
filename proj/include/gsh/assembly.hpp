#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsh/numeric.hpp"
#include "gsh/pmgraph.hpp"
#include "gsh/siegel.hpp"

namespace gsh {

/// A quantity with an exact rational part and a floating residual. Finite
/// place data stays exact as long as every log Nv is given as a rational
/// (a formal unit); floats only enter through archimedean terms or through
/// log Nv values supplied numerically.
struct Mixed {
  Rational exact;
  Real approx = 0;
  /// True once any floating input has touched the value.
  bool inexact = false;

  static Mixed of(const Rational& r) { return {r, 0, false}; }
  static Mixed of(Real x) { return {Rational(0), x, true}; }

  Real value() const { return static_cast<Real>(to_double(exact)) + approx; }
};

Mixed operator+(const Mixed& a, const Mixed& b);
Mixed operator-(const Mixed& a, const Mixed& b);
Mixed operator-(const Mixed& a);
Mixed operator*(const Mixed& a, const Mixed& b);
Mixed operator*(const Mixed& a, const Rational& r);
Mixed operator*(const Rational& r, const Mixed& a);
std::string to_string(const Mixed& m);

/// A per-place value together with its weight log Nv (1 for infinite places).
struct WeightedValue {
  Mixed value;
  Mixed weight;
};

struct FinitePlaceRecord {
  std::string label;
  /// log Nv, must be positive.
  Mixed log_nv = Mixed::of(Rational(1));
  std::optional<Rational> ord;
  std::optional<Rational> lambda;
  std::optional<Rational> epsilon;
  std::optional<Rational> phi;
  std::optional<Rational> delta;
  std::optional<std::vector<Rational>> delta_by_type;
  std::optional<Rational> h;
  std::optional<Rational> ord_lower_bound;
  std::optional<PmGraph> graph;
};

struct InfinitePlaceRecord {
  std::string label;
  std::optional<Real> log_norm_chi18;
  std::optional<Real> lambda;
  std::optional<Real> phi;
  std::optional<Real> delta;
  /// A period matrix from which log_norm_chi18 can be computed.
  std::optional<CMatrix> omega;
};

struct PlaceTable {
  int genus = 3;
  /// [k : Q].
  int degree = 1;
  std::vector<FinitePlaceRecord> finite;
  std::vector<InfinitePlaceRecord> infinite;
  std::optional<Mixed> omega_hat_sq;
  std::optional<Mixed> omega_bar_sq;
  std::optional<Mixed> faltings_degree;
  std::optional<Mixed> neron_tate_height;
};

/// Throws BadParameters for g < 2, degree < 1, log Nv <= 0 or duplicate labels.
void check_table(const PlaceTable& table);

/// Weighted per-place lists for the identities. Throws MissingField naming
/// the first place lacking the field.
std::vector<WeightedValue> lambda_terms(const PlaceTable& table);
std::vector<WeightedValue> phi_terms(const PlaceTable& table);
std::vector<WeightedValue> delta_terms(const PlaceTable& table);
/// Finite places only.
std::vector<WeightedValue> epsilon_terms(const PlaceTable& table);

struct PlaceContribution {
  std::string label;
  bool finite = true;
  /// 21 (ord/18 - lambda) log Nv, or 21 (-log||chi'18||/18 - lambda).
  Mixed value;
  /// Same with ord replaced by its lower bound, when one is known.
  std::optional<Mixed> at_lower_bound;
};

struct GsHeight {
  Mixed value;
  std::vector<PlaceContribution> places;
};

/// Height of the canonical Gross-Schoen cycle of a genus-3 curve. Throws
/// WrongGenus, MissingField.
GsHeight gs_height(const PlaceTable& table);

/// (2g+1)/(2g-2) omega_hat^2 - sum phi log Nv + 12 (g-1) [k:Q] h(x). Throws WrongGenus.
Mixed zhang_identity(int g, const Mixed& omega_hat_sq, const std::vector<WeightedValue>& phi, int degree,
                     const Mixed& neron_tate_height);

/// 6(2g+1)/(g-1) (deg - sum lambda log Nv). Throws WrongGenus.
Mixed faltings_route_height(int g, const Mixed& faltings_degree, const std::vector<WeightedValue>& lambda);

/// deg det f_* omega = (sum ord log Nv - sum log||chi'18||) / 18. Throws
/// WrongGenus, MissingField.
Mixed faltings_from_chi18(const PlaceTable& table);

/// 12 deg - omega_bar^2 - sum delta log Nv.
Mixed noether_residual(const Mixed& faltings_degree, const Mixed& omega_bar_sq, const std::vector<WeightedValue>& delta);

/// omega_bar^2 = omega_hat^2 + sum_finite eps log Nv.
Mixed omega_bar_from_hat(const Mixed& omega_hat_sq, const std::vector<WeightedValue>& epsilon);

/// Noether residual for the table. deg falls back to faltings_from_chi18 and
/// omega_bar^2 to omega_bar_from_hat. Throws MissingField.
Mixed noether_check(const PlaceTable& table);

enum class BoundStatus { Satisfied, Tight, Violated };
const char* to_string(BoundStatus s);

struct ConjectureReport {
  Mixed omega_hat_sq;
  /// sum phi log Nv.
  Mixed phi_sum;
  /// (2g-2)/(2g+1) phi_sum.
  Mixed conjectural_bound;
  /// 2/(3g-1) phi_sum.
  Mixed unconditional_bound;
  BoundStatus conjectural = BoundStatus::Satisfied;
  BoundStatus unconditional = BoundStatus::Satisfied;
};

/// Compares omega_hat^2 with both lower bounds. Equality counts as Tight:
/// exactly for exact values, within `tol` relative otherwise. Throws MissingField.
ConjectureReport conjecture_report(const PlaceTable& table, Real tol = 1e-10);

/// Fills lambda, delta, delta_by_type and, for genus 3, h and the ord lower
/// bound from attached graphs. Throws FieldConflict when a provided value
/// differs from the derived one or ord is below the bound, WrongGenus when a
/// graph's genus differs from the table's.
PlaceTable graph_autofill(const PlaceTable& table);

/// Computes log||chi'18|| for infinite places that carry a period matrix.
/// Throws FieldConflict when a provided value differs by more than `tol`
/// relative.
PlaceTable period_autofill(const PlaceTable& table, const EvalParams& params = {}, Real tol = 1e-8);

struct SweepRow {
  Real n = 0;
  Real kappa = 0;
  Real det_im_omega = 0;
  Real log_norm_chi18 = 0;
  /// -log||chi'18|| / 18.
  Real f = 0;
  bool ok = false;
  std::string error;
};

struct LinearFit {
  Real slope = 0;
  Real intercept = 0;
  Real max_residual = 0;
  int rows = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// F against log n.
  LinearFit f_fit;
  /// F + (1/2) log det Im Omega against log n; its slope is ord/(18 d).
  LinearFit corrected_fit;
  /// 18 * corrected_fit.slope.
  Real fitted_order = 0;
  /// det Im Omega against log n.
  LinearFit det_fit;
  /// max |residual| / |det Im Omega| of det_fit.
  Real det_relative_residual = 0;
  bool f_increasing = false;
};

/// Least squares line through (x, y). Throws BadParameters for fewer than two
/// points or constant x.
LinearFit fit_line(const std::vector<Real>& x, const std::vector<Real>& y);

/// Runs the curves D_{1/n}. Failing rows are kept with ok = false and do not
/// affect the others; fits use the last half of the successful rows. Throws
/// BadParameters for n < 2.
SweepResult kappa_sweep(const std::vector<Real>& ns, const EvalParams& params = {});

/// Fixed layout: '#' comment lines, then n,kappa,det_im_omega,log_norm_chi18,F,status.
std::string sweep_csv(const SweepResult& result);

}  // namespace gsh
