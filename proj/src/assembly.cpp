#include "gsh/assembly.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "gsh/electrical.hpp"
#include "gsh/error.hpp"
#include "gsh/genus3.hpp"
#include "gsh/periods.hpp"

namespace gsh {

namespace {

Real real_of(const Rational& r) { return static_cast<Real>(to_double(r)); }

[[noreturn]] void missing(const std::string& place, const std::string& field) {
  throw Error(Errc::MissingField, "place '" + place + "' has no " + field);
}

void require_genus(int g, int want) {
  if (g != want) throw Error(Errc::WrongGenus, "expected genus " + std::to_string(want) + ", got " + std::to_string(g));
}

void require_genus_at_least_two(int g) {
  if (g < 2) throw Error(Errc::WrongGenus, "genus must be at least 2, got " + std::to_string(g));
}

Mixed weighted_sum(const std::vector<WeightedValue>& terms) {
  Mixed s;
  for (const auto& t : terms) s = s + t.value * t.weight;
  return s;
}

}  // namespace

Mixed operator+(const Mixed& a, const Mixed& b) { return {a.exact + b.exact, a.approx + b.approx, a.inexact || b.inexact}; }

Mixed operator-(const Mixed& a) { return {-a.exact, -a.approx, a.inexact}; }

Mixed operator-(const Mixed& a, const Mixed& b) { return a + (-b); }

Mixed operator*(const Mixed& a, const Mixed& b) {
  const Real ae = real_of(a.exact), be = real_of(b.exact);
  return {a.exact * b.exact, ae * b.approx + a.approx * be + a.approx * b.approx, a.inexact || b.inexact};
}

Mixed operator*(const Mixed& a, const Rational& r) { return {a.exact * r, a.approx * real_of(r), a.inexact}; }

Mixed operator*(const Rational& r, const Mixed& a) { return a * r; }

std::string to_string(const Mixed& m) {
  if (!m.inexact) return to_string(m.exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(m.approx));
  if (m.exact == 0) return buf;
  return to_string(m.exact) + " + " + buf;
}

void check_table(const PlaceTable& table) {
  if (table.genus < 2) throw Error(Errc::BadParameters, "genus must be at least 2");
  if (table.degree < 1) throw Error(Errc::BadParameters, "degree [k:Q] must be positive");
  std::set<std::string> labels;
  for (const auto& p : table.finite) {
    if (!(p.log_nv.value() > 0)) throw Error(Errc::BadParameters, "place '" + p.label + "' has log Nv <= 0");
    if (!labels.insert(p.label).second) throw Error(Errc::BadParameters, "duplicate place label '" + p.label + "'");
  }
  for (const auto& p : table.infinite) {
    if (!labels.insert(p.label).second) throw Error(Errc::BadParameters, "duplicate place label '" + p.label + "'");
  }
}

namespace {

template <class Get>
std::vector<WeightedValue> finite_terms(const PlaceTable& table, const std::string& name, Get get) {
  check_table(table);
  std::vector<WeightedValue> out;
  for (const auto& p : table.finite) {
    const std::optional<Rational>& v = get(p);
    if (!v) missing(p.label, name);
    out.push_back({Mixed::of(*v), p.log_nv});
  }
  return out;
}

template <class Get>
void append_infinite(std::vector<WeightedValue>& out, const PlaceTable& table, const std::string& name, Get get) {
  for (const auto& p : table.infinite) {
    const std::optional<Real>& v = get(p);
    if (!v) missing(p.label, name);
    out.push_back({Mixed::of(*v), Mixed::of(Rational(1))});
  }
}

}  // namespace

std::vector<WeightedValue> lambda_terms(const PlaceTable& table) {
  auto out = finite_terms(table, "lambda", [](const FinitePlaceRecord& p) -> const auto& { return p.lambda; });
  append_infinite(out, table, "lambda", [](const InfinitePlaceRecord& p) -> const auto& { return p.lambda; });
  return out;
}

std::vector<WeightedValue> phi_terms(const PlaceTable& table) {
  auto out = finite_terms(table, "phi", [](const FinitePlaceRecord& p) -> const auto& { return p.phi; });
  append_infinite(out, table, "phi", [](const InfinitePlaceRecord& p) -> const auto& { return p.phi; });
  return out;
}

std::vector<WeightedValue> delta_terms(const PlaceTable& table) {
  auto out = finite_terms(table, "delta", [](const FinitePlaceRecord& p) -> const auto& { return p.delta; });
  append_infinite(out, table, "delta", [](const InfinitePlaceRecord& p) -> const auto& { return p.delta; });
  return out;
}

std::vector<WeightedValue> epsilon_terms(const PlaceTable& table) {
  return finite_terms(table, "epsilon", [](const FinitePlaceRecord& p) -> const auto& { return p.epsilon; });
}

GsHeight gs_height(const PlaceTable& table) {
  require_genus(table.genus, 3);
  check_table(table);
  GsHeight out;
  const Rational r18(1, 18);
  for (const auto& p : table.finite) {
    if (!p.ord) missing(p.label, "ord");
    if (!p.lambda) missing(p.label, "lambda");
    PlaceContribution c{p.label, true, Mixed::of(21 * (r18 * *p.ord - *p.lambda)) * p.log_nv, std::nullopt};
    if (p.ord_lower_bound) c.at_lower_bound = Mixed::of(21 * (r18 * *p.ord_lower_bound - *p.lambda)) * p.log_nv;
    out.value = out.value + c.value;
    out.places.push_back(std::move(c));
  }
  for (const auto& p : table.infinite) {
    if (!p.log_norm_chi18) missing(p.label, "log_norm_chi18");
    if (!p.lambda) missing(p.label, "lambda");
    PlaceContribution c{p.label, false, Mixed::of(21 * (-*p.log_norm_chi18 / 18 - *p.lambda)), std::nullopt};
    out.value = out.value + c.value;
    out.places.push_back(std::move(c));
  }
  return out;
}

Mixed zhang_identity(int g, const Mixed& omega_hat_sq, const std::vector<WeightedValue>& phi, int degree,
                     const Mixed& neron_tate_height) {
  require_genus_at_least_two(g);
  return omega_hat_sq * Rational(2 * g + 1, 2 * g - 2) - weighted_sum(phi) +
         neron_tate_height * Rational(12 * (g - 1) * degree);
}

Mixed faltings_route_height(int g, const Mixed& faltings_degree, const std::vector<WeightedValue>& lambda) {
  require_genus_at_least_two(g);
  return (faltings_degree - weighted_sum(lambda)) * Rational(6 * (2 * g + 1), g - 1);
}

Mixed faltings_from_chi18(const PlaceTable& table) {
  require_genus(table.genus, 3);
  check_table(table);
  Mixed sum;
  for (const auto& p : table.finite) {
    if (!p.ord) missing(p.label, "ord");
    sum = sum + Mixed::of(*p.ord) * p.log_nv;
  }
  for (const auto& p : table.infinite) {
    if (!p.log_norm_chi18) missing(p.label, "log_norm_chi18");
    sum = sum - Mixed::of(*p.log_norm_chi18);
  }
  return sum * Rational(1, 18);
}

Mixed noether_residual(const Mixed& faltings_degree, const Mixed& omega_bar_sq, const std::vector<WeightedValue>& delta) {
  return faltings_degree * Rational(12) - omega_bar_sq - weighted_sum(delta);
}

Mixed omega_bar_from_hat(const Mixed& omega_hat_sq, const std::vector<WeightedValue>& epsilon) {
  return omega_hat_sq + weighted_sum(epsilon);
}

Mixed noether_check(const PlaceTable& table) {
  check_table(table);
  const Mixed deg = table.faltings_degree ? *table.faltings_degree : faltings_from_chi18(table);
  Mixed bar;
  if (table.omega_bar_sq) {
    bar = *table.omega_bar_sq;
  } else if (table.omega_hat_sq) {
    bar = omega_bar_from_hat(*table.omega_hat_sq, epsilon_terms(table));
  } else {
    missing("table", "omega_bar_sq or omega_hat_sq");
  }
  return noether_residual(deg, bar, delta_terms(table));
}

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Satisfied: return "satisfied";
    case BoundStatus::Tight: return "tight";
    case BoundStatus::Violated: return "violated";
  }
  return "?";
}

namespace {

BoundStatus compare(const Mixed& lhs, const Mixed& bound, Real tol) {
  const Mixed d = lhs - bound;
  if (!d.inexact) {
    if (d.exact == 0) return BoundStatus::Tight;
    return d.exact > 0 ? BoundStatus::Satisfied : BoundStatus::Violated;
  }
  const Real v = d.value();
  const Real scale = std::max({Real(1), std::abs(lhs.value()), std::abs(bound.value())});
  if (std::abs(v) <= tol * scale) return BoundStatus::Tight;
  return v > 0 ? BoundStatus::Satisfied : BoundStatus::Violated;
}

}  // namespace

ConjectureReport conjecture_report(const PlaceTable& table, Real tol) {
  check_table(table);
  if (!table.omega_hat_sq) missing("table", "omega_hat_sq");
  const int g = table.genus;
  ConjectureReport r;
  r.omega_hat_sq = *table.omega_hat_sq;
  r.phi_sum = weighted_sum(phi_terms(table));
  r.conjectural_bound = r.phi_sum * Rational(2 * g - 2, 2 * g + 1);
  r.unconditional_bound = r.phi_sum * Rational(2, 3 * g - 1);
  r.conjectural = compare(r.omega_hat_sq, r.conjectural_bound, tol);
  r.unconditional = compare(r.omega_hat_sq, r.unconditional_bound, tol);
  return r;
}

namespace {

void fill(std::optional<Rational>& slot, const Rational& derived, const std::string& place, const std::string& field) {
  if (slot && *slot != derived) {
    throw Error(Errc::FieldConflict, "place '" + place + "': " + field + " = " + to_string(*slot) +
                                         " but the graph gives " + to_string(derived));
  }
  slot = derived;
}

}  // namespace

PlaceTable graph_autofill(const PlaceTable& table) {
  check_table(table);
  PlaceTable out = table;
  for (auto& p : out.finite) {
    if (!p.graph) continue;
    const PmGraph& graph = *p.graph;
    if (graph.genus() != out.genus) {
      throw Error(Errc::WrongGenus, "place '" + p.label + "' carries a genus-" + std::to_string(graph.genus()) +
                                        " graph in a genus-" + std::to_string(out.genus) + " table");
    }
    fill(p.lambda, lambda_invariant(graph), p.label, "lambda");
    const DeltaVector dv = delta_vector(graph);
    fill(p.delta, dv.total, p.label, "delta");
    if (p.delta_by_type && *p.delta_by_type != dv.by_type) {
      throw Error(Errc::FieldConflict, "place '" + p.label + "': delta_by_type differs from the graph");
    }
    p.delta_by_type = dv.by_type;
    if (out.genus == 3) {
      fill(p.h, h_invariant(graph), p.label, "h");
      fill(p.ord_lower_bound, ord_chi18_lower_bound(graph), p.label, "ord_lower_bound");
      if (p.ord && *p.ord < *p.ord_lower_bound) {
        throw Error(Errc::FieldConflict, "place '" + p.label + "': ord = " + to_string(*p.ord) +
                                             " is below the lower bound " + to_string(*p.ord_lower_bound));
      }
    }
  }
  return out;
}

PlaceTable period_autofill(const PlaceTable& table, const EvalParams& params, Real tol) {
  check_table(table);
  PlaceTable out = table;
  for (auto& p : out.infinite) {
    if (!p.omega) continue;
    const SiegelPoint omega = SiegelPoint::make(*p.omega);
    const Chi18Value chi = chi18_tilde(omega, params);
    if (chi.vanishes) {
      throw Error(Errc::BadParameters, "place '" + p.label + "': chi18 vanishes at the given period matrix");
    }
    const Real v = log_hodge_norm_from(chi, omega);
    if (p.log_norm_chi18 && std::abs(*p.log_norm_chi18 - v) > tol * std::max<Real>(1, std::abs(v))) {
      throw Error(Errc::FieldConflict, "place '" + p.label + "': log_norm_chi18 differs from the period matrix value");
    }
    p.log_norm_chi18 = v;
  }
  return out;
}

LinearFit fit_line(const std::vector<Real>& x, const std::vector<Real>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(Errc::BadParameters, "a line fit needs at least two points");
  Real mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<Real>(n);
  my /= static_cast<Real>(n);
  Real sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) throw Error(Errc::BadParameters, "a line fit needs distinct abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.rows = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.max_residual = std::max(f.max_residual, std::abs(y[i] - f.slope * x[i] - f.intercept));
  }
  return f;
}

SweepResult kappa_sweep(const std::vector<Real>& ns, const EvalParams& params) {
  for (Real n : ns) {
    if (!(n >= 2) || !std::isfinite(n)) throw Error(Errc::BadParameters, "sweep values must satisfy n >= 2");
  }
  SweepResult res;
  for (Real n : ns) {
    SweepRow row;
    row.n = n;
    row.kappa = 1 / n;
    try {
      const SiegelPoint omega = small_period_matrix(curve_from_n(Complex(n)));
      const Chi18Value chi = chi18_tilde(omega, params);
      if (chi.vanishes) throw Error(Errc::BadParameters, "chi18 vanishes numerically");
      row.log_norm_chi18 = log_hodge_norm_from(chi, omega);
      row.f = -row.log_norm_chi18 / 18;
      // The reduced representative, where Im Omega has one entry growing with n.
      row.det_im_omega = siegel_reduce(omega).omega.im().determinant();
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    res.rows.push_back(std::move(row));
  }

  std::vector<const SweepRow*> good;
  for (const auto& r : res.rows) {
    if (r.ok) good.push_back(&r);
  }
  std::sort(good.begin(), good.end(), [](const SweepRow* a, const SweepRow* b) { return a->n < b->n; });
  res.f_increasing = good.size() >= 2;
  for (std::size_t i = 1; i < good.size(); ++i) {
    if (!(good[i]->f > good[i - 1]->f)) res.f_increasing = false;
  }
  if (good.size() < 2) return res;

  const std::size_t start = std::min(good.size() / 2, good.size() - 2);
  std::vector<Real> x, f, corrected, det;
  for (std::size_t i = start; i < good.size(); ++i) {
    x.push_back(std::log(good[i]->n));
    f.push_back(good[i]->f);
    corrected.push_back(good[i]->f + std::log(good[i]->det_im_omega) / 2);
    det.push_back(good[i]->det_im_omega);
  }
  res.f_fit = fit_line(x, f);
  res.corrected_fit = fit_line(x, corrected);
  res.fitted_order = 18 * res.corrected_fit.slope;
  res.det_fit = fit_line(x, det);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real r = std::abs(det[i] - res.det_fit.slope * x[i] - res.det_fit.intercept) / std::abs(det[i]);
    res.det_relative_residual = std::max(res.det_relative_residual, r);
  }
  return res;
}

namespace {

std::string num(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
  return buf;
}

std::string fit_line_text(const LinearFit& f) {
  return "slope=" + num(f.slope) + " intercept=" + num(f.intercept) + " max_residual=" + num(f.max_residual) +
         " rows=" + std::to_string(f.rows);
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "# F(n) = -log||chi'18||_Hdg(C_n) / 18 for C_n: y^4 = x (x - 1)(x - 1/n)\n";
  os << "# The archimedean lambda(C_n) is not computed: F(n) is the chi18 part of the archimedean\n";
  os << "# contribution only, so the rows show its growth, not the full height.\n";
  os << "# det_im_omega is taken at the Siegel-reduced period matrix.\n";
  os << "# Fits use the last half of the successful rows, against log(n).\n";
  os << "# fit F: " << fit_line_text(result.f_fit) << "\n";
  os << "# fit F + log(det_im_omega)/2: " << fit_line_text(result.corrected_fit)
     << " fitted_ord_over_d=" << num(result.fitted_order) << "\n";
  os << "# fit det_im_omega: " << fit_line_text(result.det_fit)
     << " max_relative_residual=" << num(result.det_relative_residual) << "\n";
  os << "# F strictly increasing: " << (result.f_increasing ? "yes" : "no") << "\n";
  for (const auto& r : result.rows) {
    if (!r.ok) os << "# row n=" << num(r.n) << " failed: " << r.error << "\n";
  }
  os << "n,kappa,det_im_omega,log_norm_chi18,F,status\n";
  for (const auto& r : result.rows) {
    os << num(r.n) << ',' << num(r.kappa) << ',';
    if (r.ok) {
      os << num(r.det_im_omega) << ',' << num(r.log_norm_chi18) << ',' << num(r.f) << ",ok\n";
    } else {
      os << "nan,nan,nan,failed\n";
    }
  }
  return os.str();
}

}  // namespace gsh
