#pragma once

#include <vector>

#include "gsh/quadrature.hpp"
#include "gsh/siegel.hpp"

namespace gsh {

/// y^m = prod_i (x - a_i) with distinct a_i. Supported shapes: m | n (infinity
/// unramified) and n = -1 mod m (infinity fully ramified).
class SuperellipticCurve {
 public:
  /// Throws BadParameters (m < 2, repeated or non-finite roots),
  /// UnsupportedCurve (other residues of n mod m).
  static SuperellipticCurve make(int m, std::vector<Complex> roots);

  int m() const { return m_; }
  const std::vector<Complex>& roots() const { return roots_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  int genus() const;
  bool infinity_is_branch_point() const { return degree() % m_ != 0; }

 private:
  int m_ = 2;
  std::vector<Complex> roots_;
};

/// y^4 = x (x - 1)(x - kappa). Throws DegenerateParameter for kappa in {0, 1}.
SuperellipticCurve guardia_curve(Complex kappa);

/// The curve D_kappa with kappa = 1/n. Throws DegenerateParameter for n in {0, 1}.
SuperellipticCurve curve_from_n(Complex n);

/// x^k dx / y^j.
struct Differential {
  int k = 0;
  int j = 1;

  bool operator==(const Differential&) const = default;
};

/// Order of vanishing of x^k dx / y^j at a point over the root `index`, or
/// at infinity when index == degree().
int differential_valuation(const SuperellipticCurve& curve, const Differential& w, int index);

/// Differentials x^k dx/y^j holomorphic everywhere, ordered by (j, k).
/// Throws BasisCountMismatch when the count differs from the genus.
std::vector<Differential> holomorphic_basis(const SuperellipticCurve& curve);

/// Sheet shift s (y -> exp(2 pi i s/m) y) of a small positive loop around
/// each root, followed by the loop around infinity.
std::vector<int> local_monodromy(const SuperellipticCurve& curve);

/// Length of the sheet permutation cycle for a shift s, m / gcd(s, m).
int monodromy_cycle_length(int m, int shift);

/// For curves with infinity as a branch point: an isomorphic curve in the
/// coordinate u = 1/(x - c) with infinity unramified. Other curves are
/// returned unchanged.
SuperellipticCurve unramified_at_infinity_model(const SuperellipticCurve& curve);

struct PeriodParams {
  QuadratureParams quadrature;
  /// Allowed max |Omega - Omega^T|.
  Real symmetry_tol = 1e-8;
};

struct PeriodData {
  /// Model actually integrated (infinity unramified, roots in chain order).
  SuperellipticCurve model;
  std::vector<Differential> basis;
  /// Rows: basis differentials; columns: cycles gamma_{k,l}, k-major.
  CMatrix big_periods;
  /// Intersection numbers of the cycles.
  IMatrix intersection;
  /// Rows a_1, b_1, ..., a_g, b_g as integer combinations of the cycles.
  IMatrix symplectic_basis;
  int max_nodes = 0;
  bool used_double_exponential = false;
  /// Largest refinement change over all segment integrals, relative to sum of abs terms.
  Real quadrature_change = 0;
};

/// Integrates the basis over the cycles gamma_{k,l} (segment k lifted to
/// sheets l and l+1). Throws QuadratureNonConvergence, RankDeficientCycles.
PeriodData big_periods(const SuperellipticCurve& curve, const PeriodParams& params = {});

struct SmallPeriodResult {
  SiegelPoint omega;
  Real asymmetry = 0;
  bool negated = false;
};

/// Omega = A^-1 B in the symplectic basis, symmetrized, with the sign fixed
/// so that Im Omega is positive definite. Throws SymmetryViolation,
/// NotPositiveDefinite.
SmallPeriodResult small_period_matrix(const PeriodData& data, const PeriodParams& params = {});
SiegelPoint small_period_matrix(const SuperellipticCurve& curve, const PeriodParams& params = {});

/// Omega of the hyperelliptic genus-3 curve y^2 = x^8 - 1.
SiegelPoint hyperelliptic_reference(const PeriodParams& params = {});

}  // namespace gsh
