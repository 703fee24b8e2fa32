// Python bindings. Rationals cross the boundary as "p/q" strings and
// structured results as JSON text; the gsh package turns both into native
// Python objects.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace gsh;
using nlohmann::json;

namespace {

using MatrixXcd = Eigen::MatrixXcd;

PmGraph graph_from(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return PmGraph::validate(raw_graph_from_json(doc));
}

PlaceTable table_from(const std::string& text) {
  try {
    return place_table_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

SiegelPoint point_from(const MatrixXcd& m) { return SiegelPoint::make(m.cast<Complex>()); }

MatrixXcd to_numpy(const CMatrix& m) { return m.cast<std::complex<double>>(); }

EvalParams eval_params(double tol, double max_radius, bool reduce, double zero_tol) {
  EvalParams p;
  p.tol = tol;
  p.max_radius = max_radius;
  p.reduce = reduce;
  p.zero_tol = zero_tol;
  return p;
}

py::dict fit_dict(const LinearFit& f) {
  py::dict d;
  d["slope"] = static_cast<double>(f.slope);
  d["intercept"] = static_cast<double>(f.intercept);
  d["max_residual"] = static_cast<double>(f.max_residual);
  d["rows"] = f.rows;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the gsh package";

  // Kept alive for the lifetime of the interpreter.
  static py::handle error_type = py::exception<Error>(m, "GshError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = error_type(e.what());
      err.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  m.attr("uses_long_double") = std::is_same_v<Real, long double>;

  // graphs
  m.def("validate_graph", [](const std::string& g) { return graph_to_json(graph_from(g)).dump(); });
  m.def("wedge_decompose", [](const std::string& g) {
    std::vector<std::string> out;
    for (const auto& b : wedge_decompose(graph_from(g))) out.push_back(graph_to_json(b).dump());
    return out;
  });
  m.def("invariants", [](const std::string& g) { return invariant_report_to_json(invariant_report(graph_from(g))).dump(); });
  m.def("genus3_report", [](const std::string& g) { return genus3_report_to_json(graph_from(g)).dump(); });
  m.def("effective_resistance", [](const std::string& g, const std::string& p, const std::string& q) {
    return to_string(effective_resistance(graph_from(g), p, q));
  });
  m.def("resistance_profile", [](const std::string& g, const std::string& p, const std::string& edge) {
    const EdgeProfile e = resistance_profile(graph_from(g), p, edge);
    return std::vector<std::string>{to_string(e.a), to_string(e.b), to_string(e.c)};
  });
  m.def("tau", [](const std::string& g) { return to_string(tau(graph_from(g))); });
  m.def("twogon_contribution", [](const std::string& m1, const std::string& m2) {
    const TwogonContribution c = twogon_contribution(parse_rational(m1), parse_rational(m2));
    return std::pair<std::string, std::string>{to_string(c.value), to_string(c.witness)};
  });
  m.def("height_jump_twogon", [](int g, int h, const std::string& m1, const std::string& m2) {
    return to_string(height_jump_twogon(g, h, parse_rational(m1), parse_rational(m2)));
  });

  // theta constants
  m.def("even_characteristics", [](int g) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& c : even_characteristics(g)) out.emplace_back(c.a, c.b);
    return out;
  });
  m.def(
      "theta_null",
      [](unsigned a, unsigned b, const MatrixXcd& omega, double tol, double max_radius, bool reduce) {
        const SiegelPoint pt = point_from(omega);
        const ThetaCharacteristic ch{pt.genus(), a, b};
        return std::complex<double>(theta_null(ch, pt, eval_params(tol, max_radius, reduce, 1e-9)));
      },
      py::arg("a"), py::arg("b"), py::arg("omega"), py::arg("tol") = 1e-12, py::arg("max_radius") = 40.0,
      py::arg("reduce") = true);
  m.def(
      "chi18",
      [](const MatrixXcd& omega, double tol, double max_radius, bool reduce, double zero_tol) {
        const SiegelPoint pt = point_from(omega);
        const Chi18Value c = chi18_tilde(pt, eval_params(tol, max_radius, reduce, zero_tol));
        py::dict d;
        d["value"] = std::complex<double>(c.value);
        d["log_abs"] = static_cast<double>(c.log_abs);
        d["vanishes"] = c.vanishes;
        d["scaled_abs"] = static_cast<double>(c.scaled_abs);
        d["min_factor_ratio"] = static_cast<double>(c.min_factor_ratio);
        std::vector<std::complex<double>> f(c.factors.begin(), c.factors.end());
        d["factors"] = f;
        d["log_norm"] = c.vanishes ? -std::numeric_limits<double>::infinity()
                                   : static_cast<double>(log_hodge_norm_from(c, pt));
        return d;
      },
      py::arg("omega"), py::arg("tol") = 1e-12, py::arg("max_radius") = 40.0, py::arg("reduce") = true,
      py::arg("zero_tol") = 1e-9);
  m.def("siegel_reduce", [](const MatrixXcd& omega) {
    const ReducedPoint r = siegel_reduce(point_from(omega));
    return py::make_tuple(to_numpy(r.omega.omega()), r.gamma, r.iteration_cap_hit);
  });
  m.def("sp_transform", [](const MatrixXcd& omega, const IMatrix& gamma) {
    return to_numpy(sp_transform(point_from(omega), gamma).omega());
  });
  m.def("is_symplectic", [](const IMatrix& gamma) { return is_symplectic(gamma); });

  // period matrices
  m.def("period_matrix_n", [](std::complex<double> n) {
    return to_numpy(small_period_matrix(curve_from_n(Complex(n))).omega());
  });
  m.def("period_matrix_kappa", [](std::complex<double> kappa) {
    return to_numpy(small_period_matrix(guardia_curve(Complex(kappa))).omega());
  });
  m.def("period_matrix", [](int mm, const std::vector<std::complex<double>>& roots) {
    std::vector<Complex> r(roots.begin(), roots.end());
    return to_numpy(small_period_matrix(SuperellipticCurve::make(mm, std::move(r))).omega());
  });
  m.def("hyperelliptic_reference", [] { return to_numpy(hyperelliptic_reference().omega()); });

  // heights
  m.def(
      "assemble",
      [](const std::string& table, double tol) {
        EvalParams p;
        p.tol = tol;
        return assemble_report(table_from(table), p).dump();
      },
      py::arg("table"), py::arg("tol") = 1e-12);
  m.def("conjecture_report", [](const std::string& table) {
    return conjecture_report_to_json(conjecture_report(graph_autofill(table_from(table)))).dump();
  });
  m.def("autofill", [](const std::string& table) {
    return place_table_to_json(period_autofill(graph_autofill(table_from(table)))).dump();
  });
  m.def(
      "kappa_sweep",
      [](const std::vector<double>& ns, double tol) {
        EvalParams p;
        p.tol = tol;
        const SweepResult r = kappa_sweep(std::vector<Real>(ns.begin(), ns.end()), p);
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["n"] = static_cast<double>(row.n);
          d["kappa"] = static_cast<double>(row.kappa);
          d["det_im_omega"] = static_cast<double>(row.det_im_omega);
          d["log_norm_chi18"] = static_cast<double>(row.log_norm_chi18);
          d["F"] = static_cast<double>(row.f);
          d["ok"] = row.ok;
          d["error"] = row.error;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["f_fit"] = fit_dict(r.f_fit);
        out["corrected_fit"] = fit_dict(r.corrected_fit);
        out["det_fit"] = fit_dict(r.det_fit);
        out["fitted_order"] = static_cast<double>(r.fitted_order);
        out["det_relative_residual"] = static_cast<double>(r.det_relative_residual);
        out["f_increasing"] = r.f_increasing;
        out["csv"] = sweep_csv(r);
        return out;
      },
      py::arg("ns"), py::arg("tol") = 1e-12);
}
