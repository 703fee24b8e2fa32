#pragma once

#include <vector>

#include "gsh/numeric.hpp"

namespace gsh {

/// A point of the Siegel upper half space: symmetric complex g x g matrix
/// with positive definite imaginary part. Constructed only via `make`.
class SiegelPoint {
 public:
  /// Symmetrizes after checking max|Omega - Omega^T| <= sym_tol * max(1, max|Omega|).
  /// Throws NotInSiegelSpace.
  static SiegelPoint make(const CMatrix& omega, Real sym_tol = 1e-8);
  static SiegelPoint make(const RMatrix& re, const RMatrix& im, Real sym_tol = 1e-8);

  const CMatrix& omega() const { return omega_; }
  int genus() const { return static_cast<int>(omega_.rows()); }
  RMatrix re() const { return omega_.real(); }
  RMatrix im() const { return omega_.imag(); }

 private:
  CMatrix omega_;
};

/// Characteristic [a/2; b/2] stored as bit masks: bit i of `a` is 2 eps1_i.
struct ThetaCharacteristic {
  int genus = 0;
  unsigned a = 0;
  unsigned b = 0;

  int parity() const { return __builtin_popcount(a & b) & 1; }
  bool even() const { return parity() == 0; }
};

struct EvalParams {
  /// Absolute truncation tolerance per theta value.
  Real tol = 1e-12;
  /// Enumeration radius cap, in the Im(Omega) norm.
  Real max_radius = 40;
  /// Reduce into a Siegel fundamental-domain neighbourhood before summing.
  bool reduce = true;
  /// A theta factor counts as zero when |theta| < zero_tol * max |theta|.
  Real zero_tol = 1e-9;
};

/// All even characteristics, 2^(g-1)(2^g+1) of them, in (a, b) lexicographic order.
std::vector<ThetaCharacteristic> even_characteristics(int g);

/// Sum over n in Z^g of exp(pi i (n+a/2)^T Omega (n+a/2) + 2 pi i (n+a/2)^T b/2).
/// Throws OddCharacteristic, NotInSiegelSpace, TruncationRadiusExceeded.
Complex theta_null(const ThetaCharacteristic& ch, const SiegelPoint& omega, const EvalParams& params = {});

/// Smallest radius R with the lattice tail bound below `tol`, for
/// lambda_min the smallest eigenvalue of Im(Omega). Throws
/// TruncationRadiusExceeded past `max_radius`.
Real truncation_radius(int g, Real lambda_min, Real tol, Real max_radius);

struct Chi18Value {
  /// chi18_tilde(Omega); may underflow to 0 even when log_abs is finite.
  Complex value;
  /// log|chi18_tilde(Omega)|, -inf when it vanishes.
  Real log_abs = 0;
  bool vanishes = false;
  /// |chi18_tilde| / (geometric mean of nonzero |theta|)^18.
  Real scaled_abs = 0;
  /// min |theta| / max |theta| over the 36 factors.
  Real min_factor_ratio = 0;
  /// Theta values at the point actually summed (the reduced point when reduction is on).
  std::vector<Complex> factors;
};

/// Product of the 36 even theta constants. Throws WrongGenus unless g = 3.
Chi18Value chi18_tilde(const SiegelPoint& omega, const EvalParams& params = {});

/// log of 2^-28 (2 pi)^54 |chi18_tilde(Omega)| det(Im Omega)^9; -inf when
/// chi18_tilde vanishes.
Real log_hodge_norm_chi18_prime(const SiegelPoint& omega, const EvalParams& params = {});

/// Same, from an already computed chi18 value at `omega`.
Real log_hodge_norm_from(const Chi18Value& chi, const SiegelPoint& omega);

/// J = [[0, I], [-I, 0]].
IMatrix symplectic_form(int g);
bool is_symplectic(const IMatrix& gamma);

/// Omega -> (A Omega + B)(C Omega + D)^-1. Throws NotSymplectic, SingularDenominator.
SiegelPoint sp_transform(const SiegelPoint& omega, const IMatrix& gamma);

/// det(C Omega + D) for gamma = [[A, B], [C, D]].
Complex automorphy_det(const SiegelPoint& omega, const IMatrix& gamma);

struct ReducedPoint {
  SiegelPoint omega;
  /// gamma with omega = gamma . input.
  IMatrix gamma;
  int iterations = 0;
  bool iteration_cap_hit = false;
};

/// Alternates LLL reduction of Im(Omega), integer translation of Re(Omega)
/// into [-1/2, 1/2] and the quasi-inversion at |Omega_11| < 1.
ReducedPoint siegel_reduce(const SiegelPoint& omega, int max_iterations = 200);

/// Elementary symplectic generators, used to build test transformations.
IMatrix sp_translation(int g, int i, int j, long long k);
IMatrix sp_unimodular(int g, int i, int j, long long k);
IMatrix sp_quasi_inversion(int g, int i);

}  // namespace gsh
