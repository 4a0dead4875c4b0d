#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "sawtooth/alternating.hpp"
#include "sawtooth/io.hpp"
#include "sawtooth/network.hpp"
#include "sawtooth/pwl.hpp"
#include "sawtooth/verify.hpp"

namespace py = pybind11;
using sawtooth::ExactRational;

// ExactRational <-> fractions.Fraction (int and "p/q" str accepted on input)
namespace pybind11::detail {
template <>
struct type_caster<ExactRational> {
  PYBIND11_TYPE_CASTER(ExactRational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr())) return false;
    std::string text;
    if (PyLong_Check(src.ptr())) {
      text = py::str(src);
    } else if (PyUnicode_Check(src.ptr())) {
      text = src.cast<std::string>();
    } else if (py::isinstance(src, fraction_type())) {
      text = std::string(py::str(src.attr("numerator"))) + "/" +
             std::string(py::str(src.attr("denominator")));
    } else {
      return false;
    }
    try {
      value = ExactRational::parse(text);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const ExactRational& q, return_value_policy, handle) {
    return fraction_type()(py::int_(py::str(q.numerator_str())),
                           py::int_(py::str(q.denominator_str())))
        .release();
  }

 private:
  static py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }
};
}  // namespace pybind11::detail

namespace {

using sawtooth::PwlFunction;

PwlFunction make_pwl(std::vector<ExactRational> breakpoints,
                     const std::vector<std::pair<ExactRational, ExactRational>>& pieces) {
  std::vector<sawtooth::AffinePiece> ps;
  ps.reserve(pieces.size());
  for (const auto& [s, c] : pieces) ps.push_back({s, c});
  return PwlFunction(std::move(breakpoints), std::move(ps));
}

std::vector<std::pair<ExactRational, ExactRational>> pieces_of(const PwlFunction& f) {
  std::vector<std::pair<ExactRational, ExactRational>> out;
  for (const auto& p : f.pieces()) out.emplace_back(p.slope, p.intercept);
  return out;
}

sawtooth::LabeledDataset dataset_from(const std::vector<std::pair<ExactRational, int>>& points) {
  std::vector<sawtooth::LabeledPoint> ps;
  for (const auto& [x, y] : points) {
    if (y != 0 && y != 1) throw std::invalid_argument("labels must be 0 or 1");
    ps.push_back({x, static_cast<std::uint8_t>(y)});
  }
  return sawtooth::LabeledDataset(std::move(ps));
}

py::dict report_dict(const sawtooth::SuiteReport& r) {
  py::dict d;
  d["suite"] = r.name;
  d["cases"] = r.cases;
  d["failures"] = r.failures;
  d["counterexamples"] = r.counterexamples;
  d["seed"] = r.seed;
  d["wall_seconds"] = r.wall_seconds;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact piecewise-affine functions, ReLU network compilation, and error bounds";

  py::register_exception<sawtooth::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PwlFunction>(m, "PwlFunction")
      .def(py::init<>())
      .def(py::init(&make_pwl), py::arg("breakpoints"), py::arg("pieces"),
           "Right-continuous form from breakpoints and (slope, intercept) pairs")
      .def_static("constant", &PwlFunction::constant)
      .def_static("affine", &PwlFunction::affine, py::arg("slope"), py::arg("intercept"))
      .def_static("from_json", [](const std::string& text) {
        return sawtooth::pwl_from_json(sawtooth::parse_json_text(text));
      })
      .def("to_json", [](const PwlFunction& f) { return sawtooth::pwl_to_json(f).dump(); })
      .def("__call__", [](const PwlFunction& f, const ExactRational& x) { return f(x); })
      .def_property_readonly("breakpoints", &PwlFunction::breakpoints)
      .def_property_readonly("pieces", &pieces_of)
      .def_property_readonly("piece_count", &PwlFunction::piece_count)
      .def("__eq__", [](const PwlFunction& a, const PwlFunction& b) { return sawtooth::pwl_equal(a, b); })
      .def("__repr__", [](const PwlFunction& f) {
        return "PwlFunction(" + std::to_string(f.piece_count()) + " pieces)";
      });

  m.def("pwl_add", &sawtooth::pwl_add);
  m.def("pwl_compose", &sawtooth::pwl_compose, py::arg("outer"), py::arg("inner"));
  m.def("pwl_scale_shift", &sawtooth::pwl_scale_shift, py::arg("f"), py::arg("a"), py::arg("c"));
  m.def(
      "threshold_regions",
      [](const PwlFunction& f) {
        py::list out;
        for (const auto& r : sawtooth::threshold_classifier(f).regions()) {
          py::dict d;
          d["lo"] = r.lo ? py::cast(*r.lo) : py::none();
          d["hi"] = r.hi ? py::cast(*r.hi) : py::none();
          d["lo_closed"] = r.lo_closed;
          d["hi_closed"] = r.hi_closed;
          d["label"] = static_cast<int>(r.label);
          out.append(d);
        }
        return out;
      },
      "Regions of x -> 1[f(x) >= 1/2], left to right");

  m.def("mirror_map", &sawtooth::mirror_map);
  m.def("mirror_network", []() { return sawtooth::network_to_json(sawtooth::mirror_network()).dump(); },
        "The tent map as a ReLU network, in the JSON network format");
  m.def("mirror_closed_form", &sawtooth::mirror_closed_form, py::arg("x"), py::arg("k"));
  m.def("mirror_closed_form_pwl", &sawtooth::mirror_closed_form_pwl, py::arg("k"));
  m.def(
      "compile_network",
      [](const std::string& json_text, std::optional<std::uint32_t> iterations) {
        auto rnet = sawtooth::recurrent_from_json(sawtooth::parse_json_text(json_text));
        if (iterations) rnet.iterations = *iterations;
        py::gil_scoped_release release;
        return sawtooth::compile_recurrent(rnet);
      },
      py::arg("network_json"), py::arg("iterations") = py::none());

  m.def(
      "n_ap",
      [](std::uint64_t n, bool strict) {
        const auto d = strict ? sawtooth::n_ap_strict_paper(n) : sawtooth::n_ap(n);
        std::vector<std::pair<ExactRational, int>> out;
        for (const auto& p : d.points()) out.emplace_back(p.x, p.y);
        return out;
      },
      py::arg("n"), py::arg("strict_paper_coords") = false);
  m.def(
      "classification_error",
      [](const PwlFunction& f, const std::vector<std::pair<ExactRational, int>>& points) {
        return sawtooth::classification_error(f, dataset_from(points));
      },
      py::arg("f"), py::arg("points"));
  m.def("sawtooth_lower_bound", &sawtooth::sawtooth_lower_bound, py::arg("n"), py::arg("t"));
  m.def(
      "network_lower_bound",
      [](std::uint64_t n, std::uint64_t t, std::uint64_t mm, std::uint64_t l) {
        const auto r = sawtooth::network_lower_bound(n, t, mm, l);
        py::dict d;
        d["n"] = r.n;
        d["t"] = r.t;
        d["m"] = r.m;
        d["l"] = r.l;
        d["pieces"] = r.pieces;
        d["bound"] = r.bound;
        return d;
      },
      py::arg("n"), py::arg("t"), py::arg("m"), py::arg("l"));
  m.def("ap_image_check", &sawtooth::ap_image_check, py::arg("k"));

  m.def("suite_names", &sawtooth::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::optional<std::uint64_t> cases, std::uint64_t seed) {
        sawtooth::SuiteReport r;
        {
          py::gil_scoped_release release;
          r = sawtooth::run_suite(name, cases ? *cases : sawtooth::default_cases(name), seed);
        }
        return report_dict(r);
      },
      py::arg("name"), py::arg("cases") = py::none(), py::arg("seed") = 0);
}
