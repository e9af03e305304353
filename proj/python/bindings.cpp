#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subordlab/briot_bouquet.hpp"
#include "subordlab/errors.hpp"
#include "subordlab/harness.hpp"
#include "subordlab/subordination.hpp"

namespace py = pybind11;
using namespace subordlab;

namespace {

using Coeffs = std::vector<cplx>;

Coeffs coeffs(const TaylorSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

TaylorSeries series(Coeffs c, int order) {
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient list");
  if (order > 0) return TaylorSeries(std::move(c)).with_order(order);
  return TaylorSeries(std::move(c));
}

DominantSpec dominant(const std::string& name, const py::dict& kw) {
  DominantParams p;
  for (auto [k, v] : kw) {
    const auto key = k.cast<std::string>();
    if (key == "gamma") p.gamma = v.cast<double>();
    else if (key == "A") p.A = v.cast<double>();
    else if (key == "B") p.B = v.cast<double>();
    else if (key == "a") p.a = v.cast<double>();
    else if (key == "n") p.n = v.cast<int>();
    else if (key == "alpha") p.alpha = v.cast<double>();
    else if (key == "beta") p.beta = v.cast<double>();
    else throw Error(ErrorKind::InvalidArgument, "unknown dominant parameter " + key);
  }
  return DominantSpec::from_name(name, p);
}

MembershipPath path_of(const std::string& s) {
  if (s == "auto") return MembershipPath::Auto;
  if (s == "predicate") return MembershipPath::Predicate;
  if (s == "winding") return MembershipPath::Winding;
  throw Error(ErrorKind::InvalidArgument, "path must be auto, predicate or winding");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Briot-Bouquet subordination toolkit";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IoFailure) {
        PyErr_SetString(PyExc_OSError, e.what());
      } else {
        PyErr_SetString(PyExc_ValueError, e.what());
      }
    }
  });

  m.def("dominant_names", [] {
    std::vector<std::string> out;
    for (auto n : dominant_names()) out.emplace_back(n);
    return out;
  });

  m.def(
      "evaluate_dominant",
      [](const std::string& name, cplx z, const py::kwargs& kw) { return evaluate_dominant(dominant(name, kw), z); },
      py::arg("name"), py::arg("z"));

  m.def(
      "dominant_series",
      [](const std::string& name, int order, const py::kwargs& kw) {
        return coeffs(series_of(dominant(name, kw), order));
      },
      py::arg("name"), py::arg("order") = kDefaultOrder);

  m.def(
      "boundary_curve",
      [](const std::string& name, double r, int samples, const py::kwargs& kw) {
        return boundary_curve(dominant(name, kw), r, samples).points;
      },
      py::arg("name"), py::arg("r") = 0.999, py::arg("samples") = 1024);

  // Verdicts and reports cross as JSON text; the Python side decodes them.
  m.def(
      "is_subordinate_json",
      [](Coeffs p, const std::string& name, const std::string& path, double tolerance, int samples,
         const py::kwargs& kw) {
        SubordinationConfig cfg;
        cfg.path = path_of(path);
        cfg.tolerance = tolerance;
        cfg.samples = samples;
        return verdict_to_json(is_subordinate(series(std::move(p), 0), dominant(name, kw), cfg)).dump();
      },
      py::arg("p"), py::arg("dominant"), py::arg("path") = "auto", py::arg("tolerance") = 1e-4,
      py::arg("samples") = 1024);

  m.def(
      "bb_operator",
      [](Coeffs p, Coeffs Q, cplx alpha, cplx beta, int n) {
        const int order = static_cast<int>(p.size()) - 1;
        return coeffs(bb_operator(series(std::move(p), 0), series(std::move(Q), order), BBParams(alpha, beta, n)));
      },
      py::arg("p"), py::arg("Q"), py::arg("alpha") = 0.0, py::arg("beta") = 1.0, py::arg("n") = 1);

  m.def(
      "bb_solve",
      [](Coeffs psi, Coeffs Q, cplx alpha, cplx beta, int n, int order) {
        return coeffs(bb_solve_from_target(series(std::move(psi), order), series(std::move(Q), order),
                                           BBParams(alpha, beta, n)));
      },
      py::arg("psi"), py::arg("Q"), py::arg("alpha") = 0.0, py::arg("beta") = 1.0, py::arg("n") = 1,
      py::arg("order") = kDefaultOrder);

  m.def(
      "odl_closed_form",
      [](Coeffs Q, cplx alpha, cplx beta, int n, int order) {
        return coeffs(odl_closed_form(series(std::move(Q), order), BBParams(alpha, beta, n)));
      },
      py::arg("Q"), py::arg("alpha") = 0.0, py::arg("beta") = 1.0, py::arg("n") = 1,
      py::arg("order") = kDefaultOrder);

  m.def("case_ids", &registry_ids);

  m.def(
      "verify_json",
      [](const std::string& id, int trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        return report_to_json(run_case(id, trials, seed)).dump();
      },
      py::arg("case_id"), py::arg("trials") = 100, py::arg("seed") = 0);

  m.def(
      "falsify_json",
      [](const std::string& id, int budget, std::uint64_t seed) {
        py::gil_scoped_release release;
        return report_to_json(falsify(find_case(id), budget, seed)).dump();
      },
      py::arg("case_id"), py::arg("budget") = 1000, py::arg("seed") = 0);
}
