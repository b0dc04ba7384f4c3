#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "nullsurf/run.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace nullsurf;

namespace {

std::vector<std::vector<double>> mat_rows(const Mat& m) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw DimensionMismatch("matrix rows must be square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

py::dict validation_dict(const ValidationReport& v) {
  py::dict d;
  d["eta_zeta"] = v.eta_zeta;
  d["phi_squared"] = v.phi_squared;
  d["phi_zeta"] = v.phi_zeta;
  d["eta_after_phi"] = v.eta_after_phi;
  d["compatibility"] = v.compatibility;
  d["metric_duality"] = v.metric_duality;
  d["skewness"] = v.skewness;
  d["max_residual"] = v.max_residual();
  d["trials"] = v.trials;
  d["seed"] = v.seed;
  d["pass"] = v.pass();
  return d;
}

py::dict frame_residuals_dict(const FrameResiduals& r) {
  py::dict d;
  d["xi_null"] = r.xi_null;
  d["n_null"] = r.n_null;
  d["pairing"] = r.pairing;
  d["screen_vs_xi"] = r.screen_vs_xi;
  d["screen_vs_n"] = r.screen_vs_n;
  d["phi_in_screen"] = r.phi_in_screen;
  d["dprime_orth"] = r.dprime_orth;
  d["screen_nondegenerate"] = r.screen_nondegenerate;
  d["max_residual"] = r.max_residual();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "null frames, ascreen/inascreen classification and induced almost "
            "Hermitian structures on lightlike hypersurfaces of flat indefinite "
            "almost contact metric model spaces";

  py::class_<AmbientStructure>(m, "AmbientStructure")
      .def_property_readonly("dim", &AmbientStructure::dim)
      .def_property_readonly("pairs", &AmbientStructure::pairs)
      .def_property_readonly("metric_diagonal",
                             [](const AmbientStructure& s) { return s.metric.diagonal(); })
      .def_property_readonly("phi", [](const AmbientStructure& s) { return mat_rows(s.phi); })
      .def_readonly("zeta", &AmbientStructure::zeta)
      .def_readonly("eta", &AmbientStructure::eta)
      .def("apply_phi", &AmbientStructure::apply_phi, py::arg("v"))
      .def("inner", &AmbientStructure::g, py::arg("u"), py::arg("v"))
      .def("eta_of", &AmbientStructure::eta_of, py::arg("v"));

  m.def("standard_model", &standard_model, py::arg("n"), py::arg("signs"),
        "flat model with metric diag(s1,s1,...,sn,sn,1)");
  m.def(
      "validate_structure",
      [](const AmbientStructure& S, int trials, double tol, std::uint64_t seed) {
        return validation_dict(validate_structure(S, trials, tol, seed));
      },
      py::arg("structure"), py::arg("trials") = 1000, py::arg("tol") = 1e-12,
      py::arg("seed") = 0);

  py::class_<Hypersurface>(m, "Hypersurface")
      .def_property_readonly("dim", &Hypersurface::dim)
      .def_readonly("level", &Hypersurface::level)
      .def_readonly("builtin", &Hypersurface::builtin)
      .def("value", &Hypersurface::value, py::arg("p"))
      .def("differential", &Hypersurface::differential, py::arg("p"));

  m.def(
      "affine_hypersurface",
      [](Vector w, double c) { return Hypersurface::affine(std::move(w), c); }, py::arg("covector"),
      py::arg("constant") = 0.0);
  m.def(
      "quadric_hypersurface",
      [](const std::vector<std::vector<double>>& A, Vector w, double c) {
        return Hypersurface::quadric(mat_from_rows(A), std::move(w), c);
      },
      py::arg("matrix"), py::arg("covector"), py::arg("constant") = 0.0);
  m.def(
      "null_cone", [](const AmbientStructure& S) { return Hypersurface::null_cone(S.metric); },
      py::arg("structure"));
  m.def(
      "project_to_surface",
      [](const Hypersurface& H, Vector q, int iters) {
        return project_to_surface(H, std::move(q), iters);
      },
      py::arg("surface"), py::arg("point"), py::arg("max_iters") = 30);

  py::class_<ScreenPolicy>(m, "ScreenPolicy");
  m.def("basis_scan", &ScreenPolicy::basis_scan);
  m.def("auxiliary_vector", &ScreenPolicy::auxiliary_vector, py::arg("v"));

  py::class_<NullFrame>(m, "NullFrame")
      .def_readonly("point", &NullFrame::point)
      .def_readonly("xi", &NullFrame::xi)
      .def_readonly("N", &NullFrame::N)
      .def_readonly("phi_xi", &NullFrame::phi_xi)
      .def_readonly("phi_N", &NullFrame::phi_N)
      .def_readonly("screen", &NullFrame::screen)
      .def_readonly("dprime", &NullFrame::dprime)
      .def_readonly("a", &NullFrame::a)
      .def_readonly("b", &NullFrame::b)
      .def_readonly("degenerate_span", &NullFrame::degenerate_span)
      .def("tangent_basis", &NullFrame::tangent_basis);

  m.def("normal_xi", &normal_xi, py::arg("structure"), py::arg("surface"), py::arg("point"),
        py::arg("tol") = 1e-9);
  m.def("build_null_frame", &build_null_frame, py::arg("structure"), py::arg("surface"),
        py::arg("point"), py::arg("policy") = ScreenPolicy::basis_scan(), py::arg("tol") = 1e-9);
  m.def(
      "frame_residuals",
      [](const AmbientStructure& S, const NullFrame& f) {
        return frame_residuals_dict(frame_residuals(S, f));
      },
      py::arg("structure"), py::arg("frame"));
  m.def(
      "check_dprime_invariance",
      [](const AmbientStructure& S, const NullFrame& f, double tol) {
        const auto r = check_dprime_invariance(S, f, tol);
        py::dict d;
        d["invariant"] = r.invariant;
        d["in_screen"] = r.in_screen;
        d["span_defect"] = r.span_defect;
        d["screen_defect"] = r.screen_defect;
        d["pairing_a"] = r.pairing_a;
        d["pairing_b"] = r.pairing_b;
        return d;
      },
      py::arg("structure"), py::arg("frame"), py::arg("tol") = 1e-9);

  py::class_<ZetaDecomposition>(m, "ZetaDecomposition")
      .def_readonly("a", &ZetaDecomposition::a)
      .def_readonly("b", &ZetaDecomposition::b)
      .def_readonly("f1", &ZetaDecomposition::f1)
      .def_readonly("f2", &ZetaDecomposition::f2)
      .def_readonly("W", &ZetaDecomposition::W)
      .def_readonly("Wprime", &ZetaDecomposition::Wprime)
      .def_property_readonly(
          "lam", [](const ZetaDecomposition& d) { return d.lambda; })
      .def_readonly("degenerate", &ZetaDecomposition::degenerate)
      .def_readonly("residual", &ZetaDecomposition::residual)
      .def_readonly("unit_identity", &ZetaDecomposition::unit_identity)
      .def_readonly("gram_det", &ZetaDecomposition::gram_det)
      .def_readonly("gram_det_identity", &ZetaDecomposition::gram_det_identity);

  m.def("decompose_zeta", &decompose_zeta, py::arg("structure"), py::arg("frame"),
        py::arg("tol") = 1e-9);

  py::class_<Classification>(m, "Classification")
      .def_property_readonly("label",
                             [](const Classification& c) { return to_string(c.label); })
      .def_readonly("tangential", &Classification::tangential)
      .def_readonly("proper", &Classification::proper)
      .def_readonly("diagnostics", &Classification::diagnostics);

  m.def("classify", &classify, py::arg("decomposition"), py::arg("tol") = 1e-9);
  m.def(
      "verify_calin",
      [](const AmbientStructure& S, const Hypersurface& H, const std::vector<Vector>& points,
         const ScreenPolicy& policy, double tol) {
        const auto r = verify_calin(S, H, points, policy, tol);
        py::dict d;
        d["points_checked"] = r.points_checked;
        d["applicable"] = r.applicable;
        d["violations"] = r.violations;
        d["max_a_where_b_zero"] = r.max_a_where_b_zero;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("structure"), py::arg("surface"), py::arg("points"),
      py::arg("policy") = ScreenPolicy::basis_scan(), py::arg("tol") = 1e-9);
  m.def(
      "check_independence",
      [](const AmbientStructure& S, const NullFrame& f, const ZetaDecomposition& dec, double tol) {
        const auto r = check_independence(S, f, dec, tol);
        py::dict d;
        d["applicable"] = r.applicable;
        d["gram_det_abs"] = r.gram_det_abs;
        d["phi_pair_independent"] = r.phi_pair_independent;
        d["zeta_independent"] = r.zeta_independent;
        d["dimension_ok"] = r.dimension_ok;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("structure"), py::arg("frame"), py::arg("decomposition"), py::arg("tol") = 1e-9);

  py::class_<InducedStructure>(m, "InducedStructure")
      .def_readonly("tangent", &InducedStructure::tangent)
      .def_property_readonly("phi", [](const InducedStructure& s) { return mat_rows(s.phi); })
      .def_readonly("omega", &InducedStructure::omega)
      .def_readonly("eta_restricted", &InducedStructure::eta_restricted)
      .def_property_readonly("gram", [](const InducedStructure& s) { return mat_rows(s.gram); })
      .def_readonly("b", &InducedStructure::b)
      .def_readonly("phi_squared", &InducedStructure::phi_squared)
      .def_readonly("omega_phi_vs_eta", &InducedStructure::omega_phi_vs_eta)
      .def_readonly("omega_xi", &InducedStructure::omega_xi)
      .def_readonly("phi_xi_match", &InducedStructure::phi_xi_match);

  m.def("induced_phi_omega", &induced_phi_omega, py::arg("structure"), py::arg("frame"),
        py::arg("decomposition"), py::arg("tol") = 1e-9);
  m.def("g_tilde", &g_tilde, py::arg("induced"), py::arg("X"), py::arg("Y"));
  m.def("g_induced", &g_induced, py::arg("induced"), py::arg("X"), py::arg("Y"));
  m.def(
      "verify_hermitian",
      [](const InducedStructure& ind, int trials, double tol, std::uint64_t seed) {
        const auto r = verify_hermitian(ind, trials, tol, seed);
        py::dict d;
        d["hermitian"] = r.hermitian;
        d["compatibility"] = r.compatibility;
        d["skew_exchange"] = r.skew_exchange;
        d["g_tilde_xi"] = r.gtilde_xi;
        d["g_tilde_phi_xi"] = r.gtilde_phi_xi;
        d["max_residual"] = r.max_residual();
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        return d;
      },
      py::arg("induced"), py::arg("trials") = 1000, py::arg("tol") = 1e-9, py::arg("seed") = 0);
  m.def(
      "nonexistence_witness",
      [](const InducedStructure& ind, const ZetaDecomposition& dec, double tol) {
        const auto w = nonexistence_witness(ind, dec, tol);
        py::dict d;
        d["applicable"] = w.applicable;
        d["omega_phi_xi"] = w.omega_phi_xi;
        d["b"] = w.b;
        d["hermitian_defect_xi_xi"] = w.hermitian_defect_xi_xi;
        d["skew_defect"] = w.skew_defect;
        d["omega_phi_xi_vs_b"] = w.omega_phi_xi_vs_b;
        d["defect_vs_b_sq"] = w.defect_vs_b_sq;
        d["pass"] = w.pass;
        return d;
      },
      py::arg("induced"), py::arg("decomposition"), py::arg("tol") = 1e-9);

  m.def(
      "gauss_weingarten",
      [](const AmbientStructure& S, const Hypersurface& H, const Vector& p,
         const ScreenPolicy& policy, double h, double tol) {
        FrameField field(S, H, p, policy, tol);
        const auto data = second_fundamental(field, h);
        const auto rep = verify_gw_identities(S, field, data, h);
        py::dict d;
        d["B"] = mat_rows(data.B);
        d["C"] = mat_rows(data.C);
        d["tau"] = data.tau;
        d["theta"] = data.theta;
        d["A_N"] = data.A_N;
        d["A_star_xi"] = data.A_star;
        py::dict res;
        res["symmetry"] = rep.b_symmetry;
        res["shape_B"] = rep.shape_b;
        res["shape_C"] = rep.shape_c;
        res["nabla_g"] = rep.nabla_g;
        res["b_xi_column"] = rep.b_xi_column;
        res["max_residual"] = rep.max_residual();
        d["residuals"] = res;
        return d;
      },
      py::arg("structure"), py::arg("surface"), py::arg("point"),
      py::arg("policy") = ScreenPolicy::basis_scan(), py::arg("h") = 1e-5, py::arg("tol") = 1e-9);

  // config-driven runs, mirroring the CLI
  m.def("preset_names", &preset_names);
  m.def(
      "preset_config", [](const std::string& name) { return preset_config(name).dump(2); },
      py::arg("name"));
  m.def(
      "run_classify",
      [](const std::string& config_json) {
        const auto out = run_classify(RunConfig::parse(json::parse(config_json)));
        return py::make_tuple(out.exit_code, out.report.dump(2));
      },
      py::arg("config_json"));
  m.def(
      "run_verify",
      [](const std::string& config_json) {
        const auto out = run_verify(RunConfig::parse(json::parse(config_json)));
        return py::make_tuple(out.exit_code, out.report.dump(2));
      },
      py::arg("config_json"));
  m.def(
      "frame_dump",
      [](const std::string& config_json, const Vector& point) {
        return frame_dump(RunConfig::parse(json::parse(config_json)), point).dump(2);
      },
      py::arg("config_json"), py::arg("point"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
