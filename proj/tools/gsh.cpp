// gsh: command-line front end for graph invariants, theta constants,
// period matrices and height bookkeeping.
//
// Exit codes: 0 success, 1 input or usage error, 2 inconsistent identities,
// 3 numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsh/assembly.hpp"
#include "gsh/assembly_io.hpp"
#include "gsh/electrical.hpp"
#include "gsh/error.hpp"
#include "gsh/genus3.hpp"
#include "gsh/graph_io.hpp"
#include "gsh/periods.hpp"
#include "gsh/report_io.hpp"
#include "gsh/siegel.hpp"

using namespace gsh;
using nlohmann::json;

namespace {

constexpr int kInconsistent = 2;
constexpr int kNumericFailure = 3;

bool is_numeric(Errc c) {
  switch (c) {
    case Errc::TruncationRadiusExceeded:
    case Errc::SingularDenominator:
    case Errc::QuadratureNonConvergence:
    case Errc::RankDeficientCycles:
    case Errc::SymmetryViolation:
    case Errc::NotPositiveDefinite:
    case Errc::BasisCountMismatch:
      return true;
    default:
      return false;
  }
}

std::string num(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
  return buf;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

// graph -------------------------------------------------------------------

int graph_validate(const std::string& file) {
  const PmGraph g = load_graph(file);
  std::cout << "valid pm-graph: genus " << g.genus() << ", " << g.num_vertices() << " vertices, " << g.num_edges()
            << " edges, volume " << to_string(g.volume()) << "\n";
  return 0;
}

int graph_decompose(const std::string& file) {
  const PmGraph g = load_graph(file);
  json blocks = json::array();
  for (const auto& b : wedge_decompose(g)) blocks.push_back(graph_to_json(b));
  std::cout << blocks.dump(2) << "\n";
  return 0;
}

int graph_invariants(const std::string& file, bool as_json, bool as_csv) {
  const PmGraph g = load_graph(file);
  const InvariantReport r = invariant_report(g);
  if (as_csv) {
    std::cout << "genus,tau,theta,lambda,mu,delta";
    for (std::size_t h = 0; h < r.delta.by_type.size(); ++h) std::cout << ",delta_" << h;
    std::cout << "\n" << r.genus << ',' << to_string(r.tau) << ',' << to_string(r.theta) << ',' << to_string(r.lambda)
              << ',' << to_string(r.mu) << ',' << to_string(r.delta.total);
    for (const auto& d : r.delta.by_type) std::cout << ',' << to_string(d);
    std::cout << "\n";
    return 0;
  }
  if (as_json) {
    std::cout << invariant_report_to_json(r).dump(2) << "\n";
    return 0;
  }
  std::cout << "genus  " << r.genus << "\ntau    " << to_string(r.tau) << "\ntheta  " << to_string(r.theta)
            << "\nlambda " << to_string(r.lambda) << "\nmu     " << to_string(r.mu) << "\ndelta  "
            << to_string(r.delta.total) << "\n";
  for (std::size_t h = 0; h < r.delta.by_type.size(); ++h) {
    std::cout << "delta_" << h << " " << to_string(r.delta.by_type[h]) << "\n";
  }
  return 0;
}

int graph_genus3(const std::string& file) {
  const PmGraph g = load_graph(file);
  std::cout << genus3_report_to_json(g).dump(2) << "\n";
  return 0;
}

int graph_scan_twogon(int m_max) {
  if (m_max < 1) throw Error(Errc::BadParameters, "--m-max must be positive");
  std::cout << "m1,m2,B,witness\n";
  int non_positive = 0;
  for (int m1 = 1; m1 <= m_max; ++m1) {
    for (int m2 = 1; m2 <= m_max; ++m2) {
      const TwogonContribution c = twogon_contribution(m1, m2);
      non_positive += c.value <= 0;
      std::cout << m1 << ',' << m2 << ',' << to_string(c.value) << ',' << to_string(c.witness) << "\n";
    }
  }
  if (non_positive > 0) {
    std::cerr << non_positive << " non-positive contributions\n";
    return kInconsistent;
  }
  return 0;
}

// theta -------------------------------------------------------------------

int theta_eval(const std::string& file, Real tol, bool reduce) {
  const SiegelPoint omega = SiegelPoint::make(load_omega(file));
  EvalParams params;
  params.tol = tol;
  params.reduce = reduce;
  EvalParams direct = params;
  direct.reduce = false;
  json thetas = json::array();
  for (const auto& ch : even_characteristics(omega.genus())) {
    const Complex v = theta_null(ch, omega, direct);
    thetas.push_back({{"a", ch.a}, {"b", ch.b}, {"re", static_cast<double>(v.real())}, {"im", static_cast<double>(v.imag())}});
  }
  json out{{"g", omega.genus()}, {"theta_constants", thetas}};
  if (omega.genus() == 3) {
    const Chi18Value chi = chi18_tilde(omega, params);
    out["chi18"] = {{"vanishes", chi.vanishes},
                    {"log_abs", chi.vanishes ? json(nullptr) : json(static_cast<double>(chi.log_abs))},
                    {"min_factor_ratio", static_cast<double>(chi.min_factor_ratio)},
                    {"scaled_abs", static_cast<double>(chi.scaled_abs)}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int theta_norm(const std::string& file, Real tol) {
  const SiegelPoint omega = SiegelPoint::make(load_omega(file));
  EvalParams params;
  params.tol = tol;
  const Chi18Value chi = chi18_tilde(omega, params);
  if (chi.vanishes) {
    std::cout << "-inf (a theta constant vanishes; min |theta| / max |theta| = " << num(chi.min_factor_ratio) << ")\n";
    return 0;
  }
  std::cout << num(log_hodge_norm_from(chi, omega)) << "\n";
  return 0;
}

// periods -----------------------------------------------------------------

int periods_cmd(const std::string& kappa, const std::string& n, bool hyperelliptic, const std::string& out_path) {
  const int chosen = !kappa.empty() + !n.empty() + hyperelliptic;
  if (chosen != 1) throw Error(Errc::BadParameters, "give exactly one of --kappa, --n, --hyperelliptic-ref");
  SuperellipticCurve curve = SuperellipticCurve::make(2, {Complex(0), Complex(1), Complex(2)});
  if (hyperelliptic) {
    std::vector<Complex> roots;
    for (int k = 0; k < 8; ++k) roots.push_back(std::polar(Real(1), 2 * kPi * k / 8));
    curve = SuperellipticCurve::make(2, std::move(roots));
  } else if (!kappa.empty()) {
    curve = guardia_curve(Complex(static_cast<Real>(to_double(parse_rational(kappa)))));
  } else {
    curve = curve_from_n(Complex(static_cast<Real>(to_double(parse_rational(n)))));
  }
  const PeriodData data = big_periods(curve);
  const SmallPeriodResult res = small_period_matrix(data);
  json doc = omega_to_json(res.omega.omega());
  doc["diagnostics"] = {{"asymmetry", static_cast<double>(res.asymmetry)},
                        {"negated", res.negated},
                        {"max_nodes", data.max_nodes},
                        {"double_exponential", data.used_double_exponential},
                        {"quadrature_change", static_cast<double>(data.quadrature_change)}};
  write_output(out_path, doc.dump(2) + "\n");
  if (!out_path.empty()) {
    std::cout << "genus " << res.omega.genus() << ", asymmetry " << num(res.asymmetry) << ", written to " << out_path
              << "\n";
  }
  return 0;
}

// height ------------------------------------------------------------------

int height_assemble(const std::string& file) {
  const json out = assemble_report(load_place_table(file));
  std::cout << out.dump(2) << "\n";
  return out.at("consistent").get<bool>() ? 0 : kInconsistent;
}

int height_sweep(const std::vector<double>& ns, const std::string& out_path, Real tol) {
  EvalParams params;
  params.tol = tol;
  const SweepResult r = kappa_sweep(std::vector<Real>(ns.begin(), ns.end()), params);
  write_output(out_path, sweep_csv(r));
  int failed = 0;
  for (const auto& row : r.rows) failed += row.ok ? 0 : 1;
  if (!out_path.empty()) {
    std::cout << r.rows.size() - static_cast<std::size_t>(failed) << " rows, F slope " << num(r.f_fit.slope)
              << ", fitted ord/d " << num(r.fitted_order) << ", written to " << out_path << "\n";
  }
  if (failed > 0) {
    std::cerr << failed << " rows failed\n";
    return kNumericFailure;
  }
  return 0;
}

int height_report(const std::string& file) {
  const PlaceTable t = graph_autofill(load_place_table(file));
  std::cout << conjecture_report_to_json(conjecture_report(t)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of polarized metrized graphs, genus-3 theta constants and height bookkeeping"};
  app.require_subcommand(1);
  int code = 0;

  auto* graph = app.add_subcommand("graph", "pm-graph operations");
  graph->require_subcommand(1);
  std::string graph_file;
  auto* validate = graph->add_subcommand("validate", "check a graph file");
  validate->add_option("file", graph_file)->required()->check(CLI::ExistingFile);
  validate->callback([&] { code = graph_validate(graph_file); });
  auto* decompose = graph->add_subcommand("decompose", "split at cut vertices");
  decompose->add_option("file", graph_file)->required()->check(CLI::ExistingFile);
  decompose->callback([&] { code = graph_decompose(graph_file); });
  bool as_json = false, as_csv = false;
  auto* invariants = graph->add_subcommand("invariants", "tau, theta, lambda, mu and delta");
  invariants->add_option("file", graph_file)->required()->check(CLI::ExistingFile);
  auto* json_flag = invariants->add_flag("--json", as_json, "JSON output");
  invariants->add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);
  invariants->callback([&] { code = graph_invariants(graph_file, as_json, as_csv); });
  auto* g3 = graph->add_subcommand("genus3", "genus-3 local invariants");
  g3->add_option("file", graph_file)->required()->check(CLI::ExistingFile);
  g3->callback([&] { code = graph_genus3(graph_file); });
  int m_max = 200;
  auto* scan = graph->add_subcommand("scan-twogon", "two-gon local contributions as CSV");
  scan->add_option("--m-max", m_max, "largest edge length")->capture_default_str();
  scan->callback([&] { code = graph_scan_twogon(m_max); });

  auto* theta = app.add_subcommand("theta", "theta constants and chi18");
  theta->require_subcommand(1);
  std::string omega_file;
  double tol = 1e-12;
  bool no_reduce = false;
  auto* eval = theta->add_subcommand("eval", "even theta constants and chi18");
  eval->add_option("--omega", omega_file, "period matrix file")->required()->check(CLI::ExistingFile);
  eval->add_option("--tol", tol, "truncation tolerance")->capture_default_str();
  eval->add_flag("--no-reduce", no_reduce, "sum chi18 at the given point without reduction");
  eval->callback([&] { code = theta_eval(omega_file, tol, !no_reduce); });
  auto* norm = theta->add_subcommand("norm-chi18", "log of the Hodge norm of chi'18");
  norm->add_option("--omega", omega_file, "period matrix file")->required()->check(CLI::ExistingFile);
  norm->add_option("--tol", tol, "truncation tolerance")->capture_default_str();
  norm->callback([&] { code = theta_norm(omega_file, tol); });

  auto* periods = app.add_subcommand("periods", "period matrix of y^4 = x(x-1)(x-kappa) or of y^2 = x^8 - 1");
  std::string kappa, n_value, out_path;
  bool hyperelliptic = false;
  periods->add_option("--kappa", kappa, "kappa as p/q or decimal");
  periods->add_option("--n", n_value, "kappa = 1/n");
  periods->add_flag("--hyperelliptic-ref", hyperelliptic, "the curve y^2 = x^8 - 1");
  periods->add_option("--out", out_path, "output file (stdout when omitted)");
  periods->callback([&] { code = periods_cmd(kappa, n_value, hyperelliptic, out_path); });

  auto* height = app.add_subcommand("height", "height bookkeeping");
  height->require_subcommand(1);
  std::string places;
  auto* assemble = height->add_subcommand("assemble", "evaluate the identities on a place table");
  assemble->add_option("--places", places, "place table file")->required()->check(CLI::ExistingFile);
  assemble->callback([&] { code = height_assemble(places); });
  std::vector<double> ns;
  std::string sweep_out;
  auto* sweep = height->add_subcommand("sweep", "F(n) along kappa = 1/n");
  sweep->add_option("--n", ns, "comma separated n values")->required()->delimiter(',');
  sweep->add_option("--out", sweep_out, "CSV file (stdout when omitted)");
  sweep->add_option("--tol", tol, "truncation tolerance")->capture_default_str();
  sweep->callback([&] { code = height_sweep(ns, sweep_out, tol); });
  auto* report = height->add_subcommand("report", "conjectural and known lower bounds");
  report->add_option("--places", places, "place table file")->required()->check(CLI::ExistingFile);
  report->callback([&] { code = height_report(places); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "gsh: " << e.what() << "\n";
    return is_numeric(e.code()) ? kNumericFailure : 1;
  } catch (const std::exception& e) {
    std::cerr << "gsh: " << e.what() << "\n";
    return 1;
  }
  return code;
}
