#include "gsh/siegel.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gsh/error.hpp"

namespace gsh {

namespace {

Real max_abs(const CMatrix& m) {
  Real best = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
  }
  return best;
}

bool positive_definite(const RMatrix& y) {
  Eigen::LLT<RMatrix> llt(y);
  return llt.info() == Eigen::Success;
}

CMatrix to_complex(const IMatrix& m) { return m.cast<Real>().cast<Complex>(); }

struct Blocks {
  IMatrix a, b, c, d;
};

Blocks split(const IMatrix& gamma) {
  const Eigen::Index g = gamma.rows() / 2;
  return {gamma.topLeftCorner(g, g), gamma.topRightCorner(g, g), gamma.bottomLeftCorner(g, g),
          gamma.bottomRightCorner(g, g)};
}

/// Applies gamma without the symplecticity check; callers guarantee it.
CMatrix act(const CMatrix& omega, const IMatrix& gamma) {
  Blocks bl = split(gamma);
  CMatrix num = to_complex(bl.a) * omega + to_complex(bl.b);
  CMatrix den = to_complex(bl.c) * omega + to_complex(bl.d);
  Eigen::PartialPivLU<CMatrix> lu(den.transpose());
  const Complex det = lu.determinant();
  Real scale = std::max<Real>(1, max_abs(den));
  if (!(std::abs(det) > std::numeric_limits<Real>::epsilon() * std::pow(scale, static_cast<Real>(den.rows())))) {
    throw Error(Errc::SingularDenominator, "C Omega + D is numerically singular");
  }
  CMatrix out = lu.solve(num.transpose()).transpose();
  return (out + out.transpose()) / Real(2);
}

}  // namespace

SiegelPoint SiegelPoint::make(const CMatrix& omega, Real sym_tol) {
  if (omega.rows() == 0 || omega.rows() != omega.cols()) {
    throw Error(Errc::NotInSiegelSpace, "period matrix must be square and non-empty");
  }
  if (!omega.allFinite()) throw Error(Errc::NotInSiegelSpace, "non-finite entry");
  const Real asym = max_abs(omega - omega.transpose());
  if (asym > sym_tol * std::max<Real>(1, max_abs(omega))) {
    throw Error(Errc::NotInSiegelSpace, "asymmetry " + std::to_string(static_cast<double>(asym)));
  }
  SiegelPoint p;
  p.omega_ = (omega + omega.transpose()) / Real(2);
  if (!positive_definite(p.omega_.imag())) throw Error(Errc::NotInSiegelSpace, "imaginary part is not positive definite");
  return p;
}

SiegelPoint SiegelPoint::make(const RMatrix& re, const RMatrix& im, Real sym_tol) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) throw Error(Errc::NotInSiegelSpace, "shape mismatch");
  CMatrix m(re.rows(), re.cols());
  for (Eigen::Index i = 0; i < re.rows(); ++i) {
    for (Eigen::Index j = 0; j < re.cols(); ++j) m(i, j) = Complex(re(i, j), im(i, j));
  }
  return make(m, sym_tol);
}

std::vector<ThetaCharacteristic> even_characteristics(int g) {
  std::vector<ThetaCharacteristic> out;
  const unsigned n = 1u << g;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      ThetaCharacteristic ch{g, a, b};
      if (ch.even()) out.push_back(ch);
    }
  }
  return out;
}

Real truncation_radius(int g, Real lambda_min, Real tol, Real max_radius) {
  const Real inv = 1 / std::sqrt(lambda_min);
  auto tail = [&](Real r) {
    Real sum = 0;
    for (long s = static_cast<long>(std::floor(r));; ++s) {
      Real term = std::pow(2 * (s + 1) * inv + 1, static_cast<Real>(g)) * std::exp(-kPi * s * s);
      sum += term;
      if (s > r + 1 && term < sum * std::numeric_limits<Real>::epsilon()) break;
      if (s > r + 1e4) break;
    }
    return sum;
  };
  for (Real r = 1; r <= max_radius; r += Real(0.25)) {
    if (tail(r) < tol) return r;
  }
  throw Error(Errc::TruncationRadiusExceeded,
              "tail bound needs a radius above " + std::to_string(static_cast<double>(max_radius)));
}

Complex theta_null(const ThetaCharacteristic& ch, const SiegelPoint& omega, const EvalParams& params) {
  if (!ch.even()) throw Error(Errc::OddCharacteristic, "theta constants with odd characteristic vanish identically");
  const int g = omega.genus();
  if (ch.genus != g) throw Error(Errc::WrongGenus, "characteristic genus differs from the period matrix");
  if (!(params.tol > 0)) throw Error(Errc::BadParameters, "tolerance must be positive");

  const RMatrix y = omega.im();
  Eigen::LLT<RMatrix> llt(y);
  if (llt.info() != Eigen::Success) throw Error(Errc::NotInSiegelSpace, "imaginary part is not positive definite");
  const RMatrix r = llt.matrixU();
  const Real lambda_min = Eigen::SelfAdjointEigenSolver<RMatrix>(y).eigenvalues().minCoeff();
  const Real radius = truncation_radius(g, lambda_min, params.tol, params.max_radius);
  const Real r2 = radius * radius;

  RVector c(g), b(g);
  for (int i = 0; i < g; ++i) {
    c(i) = ((ch.a >> i) & 1u) ? Real(0.5) : Real(0);
    b(i) = ((ch.b >> i) & 1u) ? Real(1) : Real(0);
  }
  const RMatrix x = omega.re();

  ComplexSum sum;
  RVector v(g);
  // Fincke-Pohst: fix v_{g-1}, ..., v_0 with v = n + c inside the ellipsoid.
  auto visit = [&](auto&& self, int i, Real remaining) -> void {
    Real center = 0;
    for (int j = i + 1; j < g; ++j) center -= r(i, j) * v(j);
    center /= r(i, i);
    const Real half = std::sqrt(std::max<Real>(remaining, 0)) / r(i, i);
    const long lo = static_cast<long>(std::ceil(center - half - c(i)));
    const long hi = static_cast<long>(std::floor(center + half - c(i)));
    for (long n = lo; n <= hi; ++n) {
      v(i) = n + c(i);
      const Real d = r(i, i) * (v(i) - center);
      const Real rest = remaining - d * d;
      if (rest < 0) continue;
      if (i > 0) {
        self(self, i - 1, rest);
      } else {
        const Real quad_im = v.dot(y * v);
        const Real quad_re = v.dot(x * v);
        const Real phase = kPi * (quad_re + v.dot(b));
        sum.add(std::exp(-kPi * quad_im) * Complex(std::cos(phase), std::sin(phase)));
      }
    }
  };
  visit(visit, g - 1, r2);
  return sum.value();
}

IMatrix symplectic_form(int g) {
  IMatrix j = IMatrix::Zero(2 * g, 2 * g);
  j.topRightCorner(g, g) = IMatrix::Identity(g, g);
  j.bottomLeftCorner(g, g) = -IMatrix::Identity(g, g);
  return j;
}

bool is_symplectic(const IMatrix& gamma) {
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0) return false;
  const IMatrix j = symplectic_form(static_cast<int>(gamma.rows() / 2));
  return gamma.transpose() * j * gamma == j;
}

Complex automorphy_det(const SiegelPoint& omega, const IMatrix& gamma) {
  Blocks bl = split(gamma);
  CMatrix den = to_complex(bl.c) * omega.omega() + to_complex(bl.d);
  return den.determinant();
}

SiegelPoint sp_transform(const SiegelPoint& omega, const IMatrix& gamma) {
  if (gamma.rows() != 2 * omega.genus() || !is_symplectic(gamma)) {
    throw Error(Errc::NotSymplectic, "gamma^T J gamma != J");
  }
  return SiegelPoint::make(act(omega.omega(), gamma));
}

IMatrix sp_translation(int g, int i, int j, long long k) {
  IMatrix m = IMatrix::Identity(2 * g, 2 * g);
  m(i, g + j) += k;
  if (i != j) m(j, g + i) += k;
  return m;
}

IMatrix sp_unimodular(int g, int i, int j, long long k) {
  IMatrix m = IMatrix::Identity(2 * g, 2 * g);
  if (i == j) return m;
  m(i, j) = k;
  m(g + j, g + i) = -k;
  return m;
}

IMatrix sp_quasi_inversion(int g, int i) {
  IMatrix m = IMatrix::Identity(2 * g, 2 * g);
  m(i, i) = 0;
  m(g + i, g + i) = 0;
  m(i, g + i) = -1;
  m(g + i, i) = 1;
  return m;
}

namespace {

/// LLL on the Gram matrix y; returns unimodular u with u^T y u reduced and its inverse.
void lll_gram(const RMatrix& y, IMatrix& u, IMatrix& u_inv) {
  const int g = static_cast<int>(y.rows());
  u = IMatrix::Identity(g, g);
  u_inv = IMatrix::Identity(g, g);
  const Real delta = Real(0.99);

  auto gso = [&](RMatrix& mu, RVector& bstar) {
    const RMatrix uf = u.cast<Real>();
    const RMatrix gram = uf.transpose() * y * uf;
    mu = RMatrix::Zero(g, g);
    bstar = RVector::Zero(g);
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < i; ++j) {
        Real s = gram(i, j);
        for (int l = 0; l < j; ++l) s -= mu(j, l) * mu(i, l) * bstar(l);
        mu(i, j) = s / bstar(j);
      }
      Real s = gram(i, i);
      for (int l = 0; l < i; ++l) s -= mu(i, l) * mu(i, l) * bstar(l);
      bstar(i) = s;
    }
  };

  RMatrix mu;
  RVector bstar;
  int k = 1;
  int guard = 0;
  while (k < g && guard++ < 10000) {
    gso(mu, bstar);
    for (int j = k - 1; j >= 0; --j) {
      const long long q = std::llround(mu(k, j));
      if (q == 0) continue;
      u.col(k) -= q * u.col(j);
      u_inv.row(j) += q * u_inv.row(k);
      gso(mu, bstar);
    }
    if (bstar(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar(k - 1)) {
      ++k;
    } else {
      u.col(k).swap(u.col(k - 1));
      u_inv.row(k).swap(u_inv.row(k - 1));
      k = std::max(k - 1, 1);
    }
  }
}

}  // namespace

ReducedPoint siegel_reduce(const SiegelPoint& omega, int max_iterations) {
  const int g = omega.genus();
  CMatrix cur = omega.omega();
  IMatrix total = IMatrix::Identity(2 * g, 2 * g);
  ReducedPoint out{omega, total, 0, false};

  for (int it = 0;; ++it) {
    if (it >= max_iterations) {
      out.iteration_cap_hit = true;
      break;
    }
    out.iterations = it + 1;

    IMatrix u, u_inv;
    lll_gram(cur.imag(), u, u_inv);
    if (u != IMatrix::Identity(g, g)) {
      IMatrix step = IMatrix::Zero(2 * g, 2 * g);
      step.topLeftCorner(g, g) = u.transpose();
      step.bottomRightCorner(g, g) = u_inv;
      const CMatrix uc = to_complex(u);
      cur = uc.transpose() * cur * uc;
      cur = (cur + cur.transpose()) / Real(2);
      total = step * total;
    }

    IMatrix shift(g, g);
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) shift(i, j) = -std::llround(cur(i, j).real());
    }
    if (!shift.isZero()) {
      IMatrix step = IMatrix::Identity(2 * g, 2 * g);
      step.topRightCorner(g, g) = shift;
      cur += to_complex(shift);
      total = step * total;
    }

    if (std::abs(cur(0, 0)) >= Real(1) - Real(1e-12)) break;
    const IMatrix step = sp_quasi_inversion(g, 0);
    cur = act(cur, step);
    total = step * total;
  }
  out.omega = SiegelPoint::make(cur, Real(1e-6));
  out.gamma = total;
  return out;
}

Chi18Value chi18_tilde(const SiegelPoint& omega, const EvalParams& params) {
  if (omega.genus() != 3) throw Error(Errc::WrongGenus, "chi18 is a genus-3 form");

  SiegelPoint point = omega;
  Complex log_correction = 0;
  if (params.reduce) {
    ReducedPoint red = siegel_reduce(omega);
    point = red.omega;
    log_correction = Real(18) * std::log(automorphy_det(omega, red.gamma));
  }

  Chi18Value out;
  Real max_abs_factor = 0;
  for (const auto& ch : even_characteristics(3)) {
    out.factors.push_back(theta_null(ch, point, params));
    max_abs_factor = std::max(max_abs_factor, std::abs(out.factors.back()));
  }

  CompensatedSum<Real> log_abs, arg, log_nonzero;
  int nonzero = 0;
  Real min_abs = std::numeric_limits<Real>::infinity();
  for (const auto& t : out.factors) {
    const Real a = std::abs(t);
    min_abs = std::min(min_abs, a);
    if (a < params.zero_tol * max_abs_factor) {
      out.vanishes = true;
      continue;
    }
    ++nonzero;
    log_abs.add(std::log(a));
    arg.add(std::arg(t));
  }
  out.min_factor_ratio = max_abs_factor > 0 ? min_abs / max_abs_factor : 0;

  Real total_log_abs = 0;
  for (const auto& t : out.factors) total_log_abs += std::log(std::abs(t));
  const Real log_gm = nonzero > 0 ? log_abs.value() / nonzero : 0;
  out.scaled_abs = std::exp(total_log_abs - 18 * log_gm);

  if (out.vanishes) {
    out.log_abs = -std::numeric_limits<Real>::infinity();
    out.value = 0;
    return out;
  }
  out.log_abs = log_abs.value() - log_correction.real();
  const Real phase = arg.value() - log_correction.imag();
  out.value = std::exp(out.log_abs) * Complex(std::cos(phase), std::sin(phase));
  return out;
}

Real log_hodge_norm_from(const Chi18Value& chi, const SiegelPoint& omega) {
  if (chi.vanishes) return -std::numeric_limits<Real>::infinity();
  const Real log_det_im = std::log(omega.im().determinant());
  return -28 * std::log(Real(2)) + 54 * std::log(2 * kPi) + chi.log_abs + 9 * log_det_im;
}

Real log_hodge_norm_chi18_prime(const SiegelPoint& omega, const EvalParams& params) {
  return log_hodge_norm_from(chi18_tilde(omega, params), omega);
}

}  // namespace gsh
