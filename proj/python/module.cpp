// Python face of the verification harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "dressing/ew.hpp"
#include "dressing/harness.hpp"

namespace py = pybind11;
namespace hn = dressing::harness;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(dressing_verify, m) {
  m.doc() = "dressing field method on local charts: verification harness";

  m.def(
      "verify",
      [](const std::string& suite, uint64_t seed, int trials, int points,
         const std::map<std::string, double>& tol, const std::string& fixture_json) {
        hn::SuiteConfig cfg;
        cfg.suite = suite;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.points = points;
        cfg.tol_overrides = tol;
        nlohmann::json fx;
        if (!fixture_json.empty()) {
          fx = nlohmann::json::parse(fixture_json);
          cfg.fixture = &fx;
        }
        hn::check_coverage();
        return json_to_py(hn::run_suite(cfg).to_json());
      },
      py::arg("suite") = "all", py::arg("seed") = 42, py::arg("trials") = 20,
      py::arg("points") = 20, py::arg("tol") = std::map<std::string, double>{},
      py::arg("fixture_json") = std::string(),
      "Run a property suite and return the report as a dict.");

  m.def("property_ids", &hn::known_ids, "Registered property ids.");
  m.def("explain", &hn::explain, py::arg("property_id"),
        "Multi-line description of one property.");

  m.def(
      "ew_masses",
      [](double g, double gp, double mu2, double lam) {
        dressing::ew::Couplings c;
        c.g = g;
        c.gp = gp;
        c.mu2 = mu2;
        c.lambda = lam;
        dressing::ew::Masses ms = dressing::ew::ew_masses(c);
        py::dict d;
        d["eta0"] = ms.eta0;
        d["mW"] = ms.mW;
        d["mZ"] = ms.mZ;
        d["mH"] = ms.mH;
        return d;
      },
      py::arg("g"), py::arg("gp"), py::arg("mu2"), py::arg("lam"),
      "Boson masses read off the dressed quadratic terms.");
}
