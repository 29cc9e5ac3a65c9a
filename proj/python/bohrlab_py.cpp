#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/hadamard.hpp"
#include "bohrlab/io.hpp"
#include "bohrlab/oracle.hpp"
#include "bohrlab/solver.hpp"

namespace py = pybind11;
using namespace bohrlab;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Bohr radius and majorant bounds";

  auto base = py::register_exception<std::logic_error>(mod, "BohrLabError", PyExc_ValueError);
  py::register_exception<DomainError>(mod, "DomainError", base.ptr());
  py::register_exception<ContractError>(mod, "ContractError", base.ptr());
  py::register_exception<UnsupportedRange>(mod, "UnsupportedRange", base.ptr());

  py::class_<WeightSequence>(mod, "WeightSequence")
      .def(py::init([](const std::string& rule) { return WeightSequence::parse(rule); }), py::arg("rule"))
      .def("__call__", &WeightSequence::operator())
      .def("describe", &WeightSequence::describe)
      .def("__repr__", [](const WeightSequence& c) { return "WeightSequence('" + c.describe() + "')"; });

  py::class_<PowerSeries>(mod, "PowerSeries")
      .def(py::init([](std::vector<Complex> c) { return PowerSeries(std::move(c)); }), py::arg("coeffs"))
      .def_property_readonly("vanish_order", &PowerSeries::vanish_order)
      .def_property_readonly("degree", &PowerSeries::degree)
      .def_property_readonly("coeffs",
                             [](const PowerSeries& f) { return std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()); })
      .def("__call__", [](const PowerSeries& f, Complex z) { return eval(f, z); })
      .def("to_json", [](const PowerSeries& f) { return to_py(io::to_json(f)); })
      .def_static("from_json", [](const py::object& o) { return io::series_from_json(from_py(o)); });

  mod.def("mobius", &mobius_series, py::arg("a"), py::arg("degree") = kDefaultDegree);
  mod.def("schur", [](std::vector<Complex> gamma, std::size_t degree) { return schur_series(SchurParams(std::move(gamma)), degree); },
          py::arg("gamma"), py::arg("degree") = kDefaultDegree);
  mod.def("blaschke",
          [](const std::vector<Complex>& zeros, double phase, std::size_t degree) {
            return blaschke_series(zeros, phase, degree);
          },
          py::arg("zeros"), py::arg("phase") = 0.0, py::arg("degree") = kDefaultDegree);
  mod.def("majorant", [](const PowerSeries& f, double r) { return majorant_series(f, r).value; });
  mod.def("area", [](const PowerSeries& f, double r) { return area_functional(f, r).value; });
  mod.def("l2_norm_sq", [](const PowerSeries& f, double r) { return l2_norm_sq(f, r).value; });
  mod.def("sup_norm", [](const PowerSeries& f) { return sup_norm_estimate(f); });

  mod.def("g_ratio_bound", [](const std::string& w, double r) { return to_py(io::to_json(g_ratio_bound(WeightSequence::parse(w), r))); },
          py::arg("weights"), py::arg("r"));
  mod.def("area_bound",
          [](int m, int p, double r) {
            const auto b = area_bound(LacunarySpec(m, p), r);
            auto j = io::to_json(b);
            j["value"] = b.value(r, 1.0);
            return to_py(j);
          },
          py::arg("m"), py::arg("p"), py::arg("r"));
  mod.def("theorem_D_exact",
          [](const std::string& w, int m, int l, double r, double a) {
            return to_py(io::to_json(theorem_D_exact(WeightSequence::parse(w), m, l, r, a)));
          },
          py::arg("weights"), py::arg("m"), py::arg("l"), py::arg("r"), py::arg("a"));
  mod.def("theorem_3_bounds",
          [](const std::string& w, int m, int l, int s, double r, double a) {
            return to_py(io::to_json(theorem_3_bounds(WeightSequence::parse(w), m, l, s, r, a)));
          },
          py::arg("weights"), py::arg("m"), py::arg("l"), py::arg("s"), py::arg("r"), py::arg("a"));
  mod.def("theorem_E_radius", [](int m, double a) { return theorem_E_radius(m, a).radius; }, py::arg("m"), py::arg("a"));
  mod.def("corollary3_constants", [] { return to_py(io::to_json(corollary3_constants())); });
  mod.def("bombieri_function", &bombieri_function);
  mod.def("old_lower_bound", &old_lower_bound);
  mod.def("upper_bound", &upper_bound);

  mod.def("g_of_t", &g_of_t, py::arg("t"), py::arg("a"));
  mod.def("solve_s", [](double a) { return solve_s(a).s; }, py::arg("a"));
  mod.def("new_lower_bound", &new_lower_bound);
  mod.def("threshold_a0", &threshold_a0);
  mod.def("threshold_a1", &threshold_a1);
  mod.def("comparison_table",
          [](std::optional<std::vector<double>> a) {
            const auto rows = comparison_table(a ? *a : default_table_a_values());
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) j.push_back(io::to_json(r));
            return to_py(j);
          },
          py::arg("a") = py::none());
  mod.def("radius_from_bound", &radius_from_bound, py::arg("bound"), py::arg("target"), py::arg("r_max"),
          py::arg("tol") = 1e-12);

  mod.def("fuzz",
          [](const std::string& id, long trials, std::uint64_t seed, const std::string& weights, int m, int p, int l,
             double a, double r, int s) {
            FuzzParams fp;
            fp.weights = weights;
            fp.m = m;
            fp.p = p;
            fp.l = l;
            fp.a = a;
            fp.r = r;
            fp.s = s;
            py::gil_scoped_release release;
            auto rep = fuzz(id, fp, trials, seed);
            py::gil_scoped_acquire acquire;
            return to_py(io::to_json(rep));
          },
          py::arg("bound_id"), py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("weights") = "n",
          py::arg("m") = 1, py::arg("p") = 0, py::arg("l") = -1, py::arg("a") = 0.4, py::arg("r") = 1.0 / 3.0,
          py::arg("s") = 0);
  mod.def("goluzin_check", &goluzin_check, py::arg("f"), py::arg("g"), py::arg("lam"));
  mod.def("subordinate", &subordinate_pair, py::arg("g"), py::arg("omega"), py::arg("degree") = kDefaultDegree);
}
