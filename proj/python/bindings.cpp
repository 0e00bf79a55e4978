// Python bindings: the pointwise energy/stress kernels on numpy arrays plus
// the run/sweep/check drivers. Heavy lifting stays in the C++ core; these
// wrappers convert small fixed-size tensors and JSON strings.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elsim/checks.hpp"
#include "elsim/driver.hpp"
#include "elsim/initial.hpp"
#include "elsim/io.hpp"
#include "elsim/leslie.hpp"
#include "elsim/young.hpp"

namespace py = pybind11;
using namespace elsim;

namespace {

Vec3 to_vec3(py::array_t<double> a) {
  auto r = a.unchecked<1>();
  if (r.shape(0) != 3) throw py::value_error("expected shape (3,)");
  return {r(0), r(1), r(2)};
}

Mat3 to_mat3(py::array_t<double> a) {
  auto r = a.unchecked<2>();
  if (r.shape(0) != 3 || r.shape(1) != 3)
    throw py::value_error("expected shape (3,3)");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = r(i, j);
  return m;
}

py::array_t<double> from_vec3(const Vec3& v) {
  py::array_t<double> out(3);
  auto w = out.mutable_unchecked<1>();
  for (int i = 0; i < 3; ++i) w(i) = v[i];
  return out;
}

py::array_t<double> from_mat3(const Mat3& m) {
  py::array_t<double> out({3, 3});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w(i, j) = m[i][j];
  return out;
}

SplitMode parse_split(const std::string& s) {
  if (s == "min_split") return SplitMode::min_split;
  if (s == "equal_split") return SplitMode::equal_split;
  throw py::value_error("split must be min_split or equal_split");
}

py::dict run_result_dict(const RunResult& res) {
  py::dict d;
  d["steps"] = res.stats.steps;
  d["initial_energy"] = res.initial_energy;
  d["final_energy"] = res.rows.back().energy.total;
  d["max_energy_eq_residual"] = res.max_energy_residual;
  d["final_norm_l2"] = res.rows.back().norm_l2;
  d["final_defect_total"] = res.rows.back().defect_total;
  d["energy_inequality_holds"] = res.inequality.holds;
  d["initial_norm_defect_linf"] = res.norm_defect_initial;
  py::list totals;
  for (const DiagRow& r : res.rows) totals.append(r.energy.total);
  d["energy_series"] = totals;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spectral Ericksen-Leslie simulator core";

  py::class_<FrankConstants>(m, "FrankConstants")
      .def(py::init([](double K1, double K2, double K3,
                       const std::string& split) {
             return FrankConstants(K1, K2, K3, parse_split(split));
           }),
           py::arg("K1"), py::arg("K2"), py::arg("K3"),
           py::arg("split") = "min_split")
      .def_readonly("K1", &FrankConstants::K1)
      .def_readonly("K2", &FrankConstants::K2)
      .def_readonly("K3", &FrankConstants::K3)
      .def_readonly("k1", &FrankConstants::k1)
      .def_readonly("k2", &FrankConstants::k2)
      .def_readonly("k3", &FrankConstants::k3)
      .def_readonly("k4", &FrankConstants::k4)
      .def_readonly("k5", &FrankConstants::k5);

  m.def("hat", [](py::array_t<double> a) { return from_mat3(hat(to_vec3(a))); },
        "skew matrix of a vector; hat(a) @ b == cross(a, b)");
  m.def("vee", [](py::array_t<double> a) { return from_vec3(vee(to_mat3(a))); },
        "left inverse of hat");

  m.def(
      "energy_density",
      [](const FrankConstants& c, py::array_t<double> h,
         py::array_t<double> S) {
        return energy_density(c, to_vec3(h), to_mat3(S));
      },
      py::arg("constants"), py::arg("h"), py::arg("S"));
  m.def(
      "energy_density_tensor_form",
      [](const FrankConstants& c, py::array_t<double> h,
         py::array_t<double> S) {
        return energy_density_tensor_form(c, to_vec3(h), to_mat3(S));
      },
      py::arg("constants"), py::arg("h"), py::arg("S"));
  m.def(
      "energy_deriv_S",
      [](const FrankConstants& c, py::array_t<double> h,
         py::array_t<double> S) {
        return from_mat3(energy_deriv_S(c, to_vec3(h), to_mat3(S)));
      },
      py::arg("constants"), py::arg("h"), py::arg("S"));
  m.def(
      "energy_deriv_h",
      [](const FrankConstants& c, py::array_t<double> h,
         py::array_t<double> S) {
        return from_vec3(energy_deriv_h(c, to_vec3(h), to_mat3(S)));
      },
      py::arg("constants"), py::arg("h"), py::arg("S"));
  m.def("one_constant_density", [](double K, py::array_t<double> S) {
    return one_constant_density(K, to_mat3(S));
  });

  m.def("build_lambda", [](const FrankConstants& c) {
    py::array_t<double> out({3, 3, 3, 3});
    auto w = out.mutable_unchecked<4>();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) w(i, j, k, l) = c.Lambda.t[i][j][k][l];
    return out;
  });

  m.def(
      "validate_leslie",
      [](double mu1, double mu2, double mu3, double mu4, double mu5,
         double mu6, double lambda) {
        const LeslieValidation v = validate(
            LeslieCoefficients{mu1, mu2, mu3, mu4, mu5, mu6, lambda});
        py::dict d;
        d["valid"] = v.valid();
        d["parodi"] = v.parodi;
        d["mu1_zero"] = v.mu1_zero;
        d["violations"] = v.violations();
        return d;
      },
      py::arg("mu1"), py::arg("mu2"), py::arg("mu3"), py::arg("mu4"),
      py::arg("mu5"), py::arg("mu6"), py::arg("lambda"));

  m.def(
      "young_transform",
      [](const std::string& name, py::array_t<double> ht,
         py::array_t<double> St) {
        PairingFunction f;
        if (name == "one")
          f = make_constant(1.0);
        else if (name == "h2S2")
          f = make_h2S2();
        else if (name == "support_probe")
          f = make_support_probe();
        else if (name == "S_norm2")
          f = make_S_norm2();
        else
          throw py::value_error("unknown integrand: " + name);
        return young_transform(f.f, to_vec3(ht), to_mat3(St));
      },
      py::arg("integrand"), py::arg("h_tilde"), py::arg("S_tilde"));

  m.def(
      "run_from_json",
      [](const std::string& config_json, const std::string& out_dir) {
        const RunConfig cfg = parse_config(config_json);
        return run_result_dict(run_simulation(cfg, out_dir));
      },
      py::arg("config_json"), py::arg("out_dir") = std::string(),
      "execute one configured run; returns summary statistics");

  m.def(
      "sweep_from_json",
      [](const std::string& config_json, const std::vector<double>& deltas,
         const std::string& out_root) {
        const RunConfig cfg = parse_config(config_json);
        const SweepResult res = delta_sweep(cfg, deltas, out_root);
        py::dict d;
        py::list norms, defects;
        for (const SweepRun& r : res.runs) {
          norms.append(r.max_norm_l2);
          defects.append(r.max_defect_total);
        }
        d["max_norm_l2"] = norms;
        d["max_defect_total"] = defects;
        d["monotone_norm_decrease"] = res.monotone_norm_decrease;
        if (res.slope_fitted) {
          d["slope_max_norm"] = res.slope_max_norm;
          d["slope_final_norm"] = res.slope_final_norm;
        }
        return d;
      },
      py::arg("config_json"), py::arg("deltas"), py::arg("out_root"));

  m.def(
      "check",
      [](const std::string& filter) {
        const auto results = run_checks(filter, "");
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("filter") = std::string(),
      "run the built-in invariant suite; returns one record per check");
}
