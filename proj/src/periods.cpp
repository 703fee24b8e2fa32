#include "gsh/periods.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsh/error.hpp"

namespace gsh {

namespace {

Real cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

Real distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  Real t = ((p - a) * std::conj(d)).real() / std::norm(d);
  t = std::clamp<Real>(t, 0, 1);
  return std::abs(p - (a + t * d));
}

Real frac(Real x) { return x - std::floor(x); }

}  // namespace

SuperellipticCurve SuperellipticCurve::make(int m, std::vector<Complex> roots) {
  if (m < 2) throw Error(Errc::BadParameters, "exponent m must be at least 2");
  if (roots.size() < 2) throw Error(Errc::BadParameters, "need at least two roots");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!std::isfinite(roots[i].real()) || !std::isfinite(roots[i].imag())) {
      throw Error(Errc::BadParameters, "non-finite root");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (roots[i] == roots[j]) throw Error(Errc::BadParameters, "repeated root");
    }
  }
  const int n = static_cast<int>(roots.size());
  if (n % m != 0 && (n + 1) % m != 0) {
    throw Error(Errc::UnsupportedCurve, "degree " + std::to_string(n) + " is neither 0 nor -1 mod " + std::to_string(m));
  }
  SuperellipticCurve c;
  c.m_ = m;
  c.roots_ = std::move(roots);
  return c;
}

int SuperellipticCurve::genus() const {
  const int n = degree();
  if (n % m_ == 0) return (m_ - 1) * (n - 2) / 2;
  return (m_ - 1) * (n - 1) / 2;
}

SuperellipticCurve guardia_curve(Complex kappa) {
  if (kappa == Complex(0) || kappa == Complex(1)) throw Error(Errc::DegenerateParameter, "kappa must avoid 0 and 1");
  return SuperellipticCurve::make(4, {Complex(0), Complex(1), kappa});
}

SuperellipticCurve curve_from_n(Complex n) {
  if (n == Complex(0) || n == Complex(1)) throw Error(Errc::DegenerateParameter, "n must avoid 0 and 1");
  return guardia_curve(Real(1) / n);
}

int differential_valuation(const SuperellipticCurve& curve, const Differential& w, int index) {
  const int m = curve.m();
  const int n = curve.degree();
  if (index < n) {
    const bool at_zero = curve.roots()[static_cast<std::size_t>(index)] == Complex(0);
    return m - 1 - w.j + (at_zero ? m * w.k : 0);
  }
  if (n % m == 0) return -w.k - 2 + w.j * n / m;
  return -m * w.k - (m + 1) + w.j * n;
}

std::vector<Differential> holomorphic_basis(const SuperellipticCurve& curve) {
  std::vector<Differential> basis;
  const int n = curve.degree();
  for (int j = 1; j < curve.m(); ++j) {
    for (int k = 0;; ++k) {
      const Differential w{k, j};
      if (differential_valuation(curve, w, n) < 0) break;
      bool holomorphic = true;
      for (int i = 0; i < n; ++i) holomorphic = holomorphic && differential_valuation(curve, w, i) >= 0;
      if (holomorphic) basis.push_back(w);
    }
  }
  if (static_cast<int>(basis.size()) != curve.genus()) {
    throw Error(Errc::BasisCountMismatch, "found " + std::to_string(basis.size()) + " differentials for genus " +
                                              std::to_string(curve.genus()));
  }
  return basis;
}

std::vector<int> local_monodromy(const SuperellipticCurve& curve) {
  std::vector<int> shifts(static_cast<std::size_t>(curve.degree()), 1);
  const int m = curve.m();
  shifts.push_back(((-curve.degree()) % m + m) % m);
  return shifts;
}

int monodromy_cycle_length(int m, int shift) {
  return m / std::gcd(m, ((shift % m) + m) % m == 0 ? m : ((shift % m) + m) % m);
}

SuperellipticCurve unramified_at_infinity_model(const SuperellipticCurve& curve) {
  if (!curve.infinity_is_branch_point()) return curve;
  Real min_re = curve.roots().front().real();
  Real spread = 0;
  for (const auto& a : curve.roots()) {
    min_re = std::min(min_re, a.real());
    for (const auto& b : curve.roots()) spread = std::max(spread, std::abs(a - b));
  }
  const Real c = min_re - std::max<Real>(1, spread);
  std::vector<Complex> roots{Complex(0)};
  for (const auto& a : curve.roots()) roots.push_back(Real(1) / (a - c));
  return SuperellipticCurve::make(curve.m(), std::move(roots));
}

namespace {

/// Segment k of the chain with the branch of sum_i log(x - a_i) that is
/// continuous on its interior.
struct Segment {
  Complex a, b, half, mid;
  Complex log_ends;  // Log(half) + Log(-half)
  std::vector<Complex> others;
  std::vector<Complex> log_mid;  // Log(mid - a_i)
  Real rho = std::numeric_limits<Real>::infinity();

  Segment(const std::vector<Complex>& chain, std::size_t k) {
    a = chain[k];
    b = chain[k + 1];
    half = (b - a) / Real(2);
    mid = (a + b) / Real(2);
    log_ends = std::log(half) + std::log(-half);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i == k || i == k + 1) continue;
      others.push_back(chain[i]);
      log_mid.push_back(std::log(mid - chain[i]));
      rho = std::min(rho, bernstein_rho((chain[i] - mid) / half));
    }
  }

  /// x and x - a_i evaluated from the nearer endpoint.
  Complex x(Real s, Real one_plus, Real one_minus) const {
    return s <= 0 ? a + half * one_plus : b - half * one_minus;
  }
  Complex x_minus(std::size_t i, Real s, Real one_plus, Real one_minus) const {
    return s <= 0 ? (a - others[i]) + half * one_plus : (b - others[i]) - half * one_minus;
  }

  /// sum_i log(x - a_i) without the ln(1+s) + ln(1-s) endpoint part.
  Complex log_rest(Real s, Real one_plus, Real one_minus) const {
    Complex total = log_ends;
    for (std::size_t i = 0; i < others.size(); ++i) {
      total += log_mid[i] + std::log(x_minus(i, s, one_plus, one_minus) / (mid - others[i]));
    }
    return total;
  }
};

struct Polyline {
  std::vector<Complex> pts;
  std::vector<Real> theta;  // continuous sum of arguments at each vertex
};

Real arg_increment(const std::vector<Complex>& roots, Complex from, Complex to) {
  Real d = 0;
  for (const auto& r : roots) d += std::arg((to - r) / (from - r));
  return d;
}

void add_arc(std::vector<Complex>& pts, Complex center, Real radius, Real from, Real to, int pieces) {
  for (int i = 0; i <= pieces; ++i) {
    const Real t = from + (to - from) * i / pieces;
    pts.push_back(center + std::polar(radius, t));
  }
}

/// Figure-eight for gamma_{k,l}: from a base point on segment k, a positive
/// loop around chain[k+1] then a negative loop around chain[k]. Radii, wedge
/// angles and base point are perturbed per cycle to keep distinct cycles in
/// general position.
Polyline cycle_polyline(const std::vector<Complex>& chain, const Segment& seg, std::size_t k, int l, int index) {
  Real scale = std::abs(seg.b - seg.a);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i != k && i != k + 1) scale = std::min(scale, distance_to_segment(chain[i], seg.a, seg.b));
  }
  const Real c = index + 1;
  const Real t_base = Real(0.35) + Real(0.3) * frac(c * Real(0.6180339887) + Real(0.1));
  const Real rho_b = scale * (Real(0.1) + Real(0.2) * frac(c * Real(0.7548776662) + Real(0.3)));
  const Real rho_a = scale * (Real(0.1) + Real(0.2) * frac(c * Real(0.5698402910) + Real(0.7)));
  const Real w_b = Real(0.12) + Real(0.25) * frac(c * Real(0.4142135624) + Real(0.2));
  const Real w_a = Real(0.12) + Real(0.25) * frac(c * Real(0.7320508076) + Real(0.5));
  const Real dir = std::arg(seg.b - seg.a);
  const int pieces = 48;

  const Complex base = seg.a + t_base * (seg.b - seg.a);
  Polyline poly;
  poly.pts.push_back(base);
  add_arc(poly.pts, seg.b, rho_b, dir + kPi + w_b, dir + 3 * kPi - w_b, pieces);
  poly.pts.push_back(base);
  add_arc(poly.pts, seg.a, rho_a, dir - w_a, dir - 2 * kPi + w_a, pieces);
  poly.pts.push_back(base);

  const Real s = 2 * t_base - 1;
  const Complex lsum = seg.log_rest(s, 1 + s, 1 - s) + std::log(1 + s) + std::log(1 - s);
  poly.theta.push_back(lsum.imag() + 2 * kPi * l);
  for (std::size_t i = 1; i < poly.pts.size(); ++i) {
    poly.theta.push_back(poly.theta.back() + arg_increment(chain, poly.pts[i - 1], poly.pts[i]));
  }
  return poly;
}

long long signed_crossings(const Polyline& p, const Polyline& q, const std::vector<Complex>& roots, int m) {
  long long total = 0;
  for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
    const Complex p0 = p.pts[i], dp = p.pts[i + 1] - p.pts[i];
    for (std::size_t j = 0; j + 1 < q.pts.size(); ++j) {
      const Complex q0 = q.pts[j], dq = q.pts[j + 1] - q.pts[j];
      const Real den = cross(dp, dq);
      if (std::abs(den) <= 1e-300) continue;
      const Real s = cross(q0 - p0, dq) / den;
      const Real t = cross(q0 - p0, dp) / den;
      if (s < 0 || s >= 1 || t < 0 || t >= 1) continue;
      const Complex x = p0 + s * dp;
      const Real theta_p = p.theta[i] + arg_increment(roots, p0, x);
      const Real theta_q = q.theta[j] + arg_increment(roots, q0, x);
      const long long d = std::llround((theta_p - theta_q) / (2 * kPi));
      if (d % m != 0) continue;
      total += den > 0 ? 1 : -1;
    }
  }
  return total;
}

/// Integer congruence P K P^T = diag(d_1 J, ..., d_r J, 0). Returns rank/2
/// blocks; `ok` is false if some d_i != 1.
int symplectic_reduce(IMatrix k, IMatrix& p, bool& ok) {
  const Eigen::Index n = k.rows();
  p = IMatrix::Identity(n, n);
  ok = true;
  auto swap_idx = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    k.row(i).swap(k.row(j));
    k.col(i).swap(k.col(j));
    p.row(i).swap(p.row(j));
  };
  int blocks = 0;
  for (Eigen::Index q = 0; q + 1 < n; q += 2) {
    for (;;) {
      long long best = 0;
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = q; i < n; ++i) {
        for (Eigen::Index j = q; j < n; ++j) {
          const long long v = std::llabs(k(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) return blocks;
      swap_idx(q, bi);
      if (bj == q) bj = bi;
      swap_idx(q + 1, bj);
      if (k(q, q + 1) < 0) swap_idx(q, q + 1);
      const long long d = k(q, q + 1);
      bool clean = true;
      for (Eigen::Index r = q + 2; r < n; ++r) {
        const long long beta = k(r, q) / d;
        const long long alpha = -(k(r, q + 1) / d);
        if (alpha != 0 || beta != 0) {
          k.row(r) += alpha * k.row(q) + beta * k.row(q + 1);
          k.col(r) += alpha * k.col(q) + beta * k.col(q + 1);
          p.row(r) += alpha * p.row(q) + beta * p.row(q + 1);
        }
        clean = clean && k(r, q) == 0 && k(r, q + 1) == 0;
      }
      if (clean) {
        if (d != 1) ok = false;
        ++blocks;
        break;
      }
    }
  }
  return blocks;
}

std::vector<Complex> chain_order(std::vector<Complex> roots, int variant) {
  std::sort(roots.begin(), roots.end(), [variant](Complex x, Complex y) {
    if (variant == 0) return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
    return std::make_pair(x.imag(), x.real()) < std::make_pair(y.imag(), y.real());
  });
  return roots;
}

PeriodData periods_for_chain(const SuperellipticCurve& curve, const std::vector<Complex>& chain,
                             const PeriodParams& params) {
  PeriodData data{SuperellipticCurve::make(curve.m(), chain), {}, {}, {}, {}, 0, false, 0};
  const int m = curve.m();
  const int g = curve.genus();
  data.basis = holomorphic_basis(data.model);
  const std::size_t nseg = chain.size() - 1;
  const int ncycles = static_cast<int>(nseg) * (m - 1);

  std::vector<Segment> segs;
  for (std::size_t k = 0; k < nseg; ++k) segs.emplace_back(chain, k);

  data.big_periods = CMatrix(g, ncycles);
  for (std::size_t k = 0; k < nseg; ++k) {
    const Segment& seg = segs[k];
    for (int d = 0; d < g; ++d) {
      const Differential w = data.basis[static_cast<std::size_t>(d)];
      const Real expo = static_cast<Real>(w.j) / m;
      auto f = [&](Real s, Real op, Real om) {
        Complex xv = seg.x(s, op, om);
        Complex xk = 1;
        for (int e = 0; e < w.k; ++e) xk *= xv;
        return xk * std::exp(-expo * seg.log_rest(s, op, om)) * seg.half;
      };
      QuadratureResult q = integrate_jacobi(f, -expo, -expo, seg.rho, params.quadrature);
      data.max_nodes = std::max(data.max_nodes, q.nodes);
      data.used_double_exponential = data.used_double_exponential || q.double_exponential;
      data.quadrature_change = std::max(data.quadrature_change, q.change / std::max<Real>(q.scale, 1e-300));
      for (int l = 0; l + 1 < m; ++l) {
        const Complex zeta_lj = std::polar(Real(1), -2 * kPi * l * w.j / m);
        const Complex factor = zeta_lj * (Real(1) - std::polar(Real(1), -2 * kPi * w.j / m));
        data.big_periods(d, static_cast<Eigen::Index>(k) * (m - 1) + l) = factor * q.value;
      }
    }
  }

  std::vector<Polyline> polys;
  for (std::size_t k = 0; k < nseg; ++k) {
    for (int l = 0; l + 1 < m; ++l) {
      polys.push_back(cycle_polyline(chain, segs[k], k, l, static_cast<int>(polys.size())));
    }
  }
  data.intersection = IMatrix::Zero(ncycles, ncycles);
  for (int i = 0; i < ncycles; ++i) {
    for (int j = i + 1; j < ncycles; ++j) {
      const long long v = signed_crossings(polys[static_cast<std::size_t>(i)], polys[static_cast<std::size_t>(j)], chain, m);
      data.intersection(i, j) = v;
      data.intersection(j, i) = -v;
    }
  }

  IMatrix p;
  bool unimodular = false;
  const int blocks = symplectic_reduce(data.intersection, p, unimodular);
  if (blocks != g || !unimodular) {
    throw Error(Errc::RankDeficientCycles, "cycles span rank " + std::to_string(2 * blocks) +
                                               (unimodular ? "" : " with non-unit blocks") + ", need " +
                                               std::to_string(2 * g));
  }
  data.symplectic_basis = p.topRows(2 * g);
  return data;
}

}  // namespace

PeriodData big_periods(const SuperellipticCurve& curve, const PeriodParams& params) {
  const SuperellipticCurve model = unramified_at_infinity_model(curve);
  for (int variant = 0;; ++variant) {
    try {
      return periods_for_chain(model, chain_order(model.roots(), variant), params);
    } catch (const Error& e) {
      if (e.code() != Errc::RankDeficientCycles || variant == 1) throw;
    }
  }
}

SmallPeriodResult small_period_matrix(const PeriodData& data, const PeriodParams& params) {
  const int g = data.model.genus();
  const CMatrix pi = data.big_periods * data.symplectic_basis.transpose().cast<Real>().cast<Complex>();
  CMatrix a(g, g), b(g, g);
  for (int i = 0; i < g; ++i) {
    a.col(i) = pi.col(2 * i);
    b.col(i) = pi.col(2 * i + 1);
  }
  CMatrix omega = a.fullPivLu().solve(b);
  Real asym = 0;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) asym = std::max(asym, std::abs(omega(i, j) - omega(j, i)));
  }
  if (!(asym <= params.symmetry_tol)) {
    throw Error(Errc::SymmetryViolation, "max |Omega - Omega^T| = " + std::to_string(static_cast<double>(asym)));
  }
  omega = (omega + omega.transpose()) / Real(2);

  auto pos_def = [](const RMatrix& y) { return Eigen::LLT<RMatrix>(y).info() == Eigen::Success; };
  const RMatrix im = omega.imag();
  if (pos_def(im)) return SmallPeriodResult{SiegelPoint::make(omega), asym, false};
  if (pos_def(-im)) return SmallPeriodResult{SiegelPoint::make(CMatrix(-omega)), asym, true};
  throw Error(Errc::NotPositiveDefinite, "Im Omega is indefinite");
}

SiegelPoint small_period_matrix(const SuperellipticCurve& curve, const PeriodParams& params) {
  return small_period_matrix(big_periods(curve, params), params).omega;
}

SiegelPoint hyperelliptic_reference(const PeriodParams& params) {
  std::vector<Complex> roots;
  for (int k = 0; k < 8; ++k) roots.push_back(std::polar(Real(1), 2 * kPi * k / 8));
  return small_period_matrix(SuperellipticCurve::make(2, std::move(roots)), params);
}

}  // namespace gsh
