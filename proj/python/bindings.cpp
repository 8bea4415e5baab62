#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hatilt/cluster_model.hpp"
#include "hatilt/errors.hpp"
#include "hatilt/homological.hpp"
#include "hatilt/pathcomb.hpp"
#include "hatilt/typea.hpp"
#include "hatilt/verify.hpp"

namespace py = pybind11;
using namespace hatilt;

namespace {

std::vector<std::string> steps_of(const std::vector<LatticePath>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.steps());
  return out;
}

UObject object_of(int d, int n, const std::vector<int>& c, int shift) {
  return {path_from_coords(d + 1, n, c), shift};
}

}  // namespace

PYBIND11_MODULE(_hatilt, m) {
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("enumerate_paths", [](int d, int n) { return steps_of(enumerate_paths(d, n)); }, py::arg("d"), py::arg("n"));
  m.def("enumerate_dyck", [](int d, int n) { return steps_of(enumerate_dyck(d, n)); }, py::arg("d"), py::arg("n"));
  m.def("coords", [](int d, int n, const std::string& steps) { return coords(LatticePath(d, n, steps)).entries(); },
        py::arg("d"), py::arg("n"), py::arg("steps"));
  m.def("rotate", [](int d, int n, const std::string& steps) { return rotate(LatticePath(d, n, steps)).steps(); },
        py::arg("d"), py::arg("n"), py::arg("steps"));
  m.def("is_dyck", [](int d, int n, const std::string& steps) { return is_dyck(LatticePath(d, n, steps)); },
        py::arg("d"), py::arg("n"), py::arg("steps"));

  m.def(
      "hom_dim",
      [](int d, int n, const std::vector<int>& src, int src_shift, const std::vector<int>& dst, int dst_shift) {
        return hatilt::hom_dim(object_of(d, n, src, src_shift), object_of(d, n, dst, dst_shift));
      },
      py::arg("d"), py::arg("n"), py::arg("src"), py::arg("src_shift"), py::arg("dst"), py::arg("dst_shift"));
  m.def(
      "hom_dim_linear",
      [](int d, int n, const std::vector<int>& src, int src_shift, const std::vector<int>& dst, int dst_shift) {
        const TypeAModel model(d, n);
        return hom_complex_dim(model.complex_of(object_of(d, n, src, src_shift)),
                               model.complex_of(object_of(d, n, dst, dst_shift)), 0);
      },
      py::arg("d"), py::arg("n"), py::arg("src"), py::arg("src_shift"), py::arg("dst"), py::arg("dst_shift"));

  m.def("claim_names", &claim_names);
  m.def(
      "run_claim",
      [](const std::string& name, int d, int n, int max_len) {
        VerifyConfig cfg;
        cfg.d = d;
        cfg.n = n;
        cfg.max_len = max_len;
        ClaimResult r;
        {
          py::gil_scoped_release release;
          r = run_claim(name, cfg);
        }
        return py::make_tuple(to_string(r.status), r.value);
      },
      py::arg("name"), py::arg("d"), py::arg("n"), py::arg("max_len") = 0);
  m.attr("__version__") = tool_version();
}
