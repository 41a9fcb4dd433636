#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "serre/cells.hpp"
#include "serre/check/acceptance.hpp"
#include "serre/extgraph.hpp"
#include "serre/golden.hpp"
#include "serre/io.hpp"
#include "serre/types.hpp"
#include "serre/weyl.hpp"

namespace py = pybind11;
using serre::json;

namespace {

// Values cross the boundary as plain Python data in the same layout as the JSON files.
json from_py(const py::handle& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

serre::Base base_of(const std::string& sign) {
  if (sign == "+") return serre::Base::plus;
  if (sign == "-") return serre::Base::minus;
  throw py::value_error("sign must be '+' or '-'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Serre weights, extension graphs and admissible sets for GL3";

  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const json::exception& x) {
      PyErr_SetString(PyExc_ValueError, x.what());
    } catch (const std::domain_error& x) {
      PyErr_SetString(PyExc_ValueError, x.what());
    }
  });

  m.def(
      "admissible",
      [](const serre::Vec3& lambda, const std::string& sign) {
        json out = json::array();
        for (const auto& x : serre::admissible_set(lambda, base_of(sign)))
          out.push_back({{"element", x}, {"length", serre::length(x, base_of(sign))}, {"text", serre::to_string(x)}});
        return to_py(out);
      },
      py::arg("lam"), py::arg("sign") = "+");

  m.def(
      "length",
      [](const py::object& x, const std::string& sign) {
        return serre::length(from_py(x).get<serre::AffElem1>(), base_of(sign));
      },
      py::arg("element"), py::arg("sign") = "+");

  m.def(
      "jh",
      [](const py::object& type, serre::Int p) { return to_py(serre::jh(from_py(type).get<serre::TameType>(), p)); },
      py::arg("type"), py::arg("p"));

  m.def(
      "trns",
      [](const std::vector<serre::Vec3>& mu, const py::object& v, serre::Int p) {
        return to_py(serre::trns(mu, from_py(v).get<serre::GraphVertex>(), p));
      },
      py::arg("mu"), py::arg("vertex"), py::arg("p"));

  m.def(
      "trns_inverse",
      [](const std::vector<serre::Vec3>& mu, const py::object& w, serre::Int p) {
        return to_py(serre::trns_inverse(mu, from_py(w).get<serre::SerreWeightNF>(), p));
      },
      py::arg("mu"), py::arg("weight"), py::arg("p"));

  m.def(
      "distance",
      [](const py::object& a, const py::object& b, std::optional<std::vector<serre::Vec3>> center, serre::Int p) {
        serre::Region region;
        if (center) region = {*center, p};
        return serre::distance(from_py(a).get<serre::GraphVertex>(), from_py(b).get<serre::GraphVertex>(), region);
      },
      py::arg("a"), py::arg("b"), py::arg("center") = py::none(), py::arg("p") = 0);

  m.def("lemma_names", &serre::ideal::lemma_names);
  m.def(
      "verify_lemma",
      [](const std::string& name, std::int64_t a, std::int64_t b, std::int64_t c, std::uint32_t p) {
        json j;
        serre::ideal::to_json(j, serre::ideal::verify_lemma(name, {a, b, c, p}));
        return to_py(j);
      },
      py::arg("name"), py::arg("a") = 70, py::arg("b") = 35, py::arg("c") = 0, py::arg("p") = 101);

  m.def(
      "acceptance",
      [](int id, std::uint64_t seed) {
        py::gil_scoped_release release;
        auto r = serre::check::run(id, {seed});
        py::gil_scoped_acquire acquire;
        return to_py(serre::check::to_json(r));
      },
      py::arg("criterion"), py::arg("seed") = serre::check::Config{}.seed);

  m.def("golden_names", &serre::golden::names);
  m.def("golden", [](const std::string& name) { return to_py(json::parse(serre::golden::text(name))); });
}
