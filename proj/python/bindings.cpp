#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mckay/chebyshev.hpp"
#include "mckay/closedform.hpp"
#include "mckay/error.hpp"
#include "mckay/io.hpp"
#include "mckay/poincare.hpp"
#include "mckay/repgraph.hpp"
#include "mckay/verify.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

py::int_ to_py(const BigInt& v) {
  if (v.fits_slong_p()) return py::int_(v.get_si());
  return py::int_(py::str(v.get_str()));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& x : p.coeffs()) out.append(to_py(x));
  return out;
}

// A group spec string or a RepGraph.
RepGraph resolve(const py::object& source) {
  if (py::isinstance<py::str>(source)) return mckay_graph(GroupKind::parse(source.cast<std::string>()));
  return source.cast<RepGraph>();
}

py::dict series_dict(const SeriesResult& r, std::size_t terms) {
  py::dict d;
  d["node"] = r.node;
  d["numerator"] = to_py(r.series.num());
  d["denominator"] = to_py(r.series.den());
  d["numerator_det"] = to_py(r.numerator_det);
  d["denominator_det"] = to_py(r.denominator_det);
  d["coefficients"] = to_py(series_expand(r.series, terms));
  return d;
}

}  // namespace

PYBIND11_MODULE(_mckay, m) {
  m.doc() = "Poincare series for tensor-power multiplicities via representation graphs";

  static py::exception<Error> exc(m, "McKayError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<RepGraph>(m, "RepGraph")
      .def(py::init<std::vector<std::string>, std::vector<long>, IntMatrix, long>(), py::arg("labels"),
           py::arg("marks"), py::arg("adjacency"), py::arg("v_dim"))
      .def_property_readonly("labels", &RepGraph::labels)
      .def_property_readonly("marks", &RepGraph::marks)
      .def_property_readonly("adjacency", py::overload_cast<>(&RepGraph::adjacency, py::const_))
      .def_property_readonly("v_dim", &RepGraph::v_dim)
      .def("is_symmetric", &RepGraph::is_symmetric)
      .def("check_dimension_count", &RepGraph::check_dimension_count)
      .def("to_json", [](const RepGraph& g) { return io::graph_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::graph_from_json(io::Json::parse(s)); })
      .def("__len__", &RepGraph::size)
      .def("__eq__", [](const RepGraph& a, const RepGraph& b) { return a == b; })
      .def("__repr__", [](const RepGraph& g) { return "<RepGraph with " + std::to_string(g.size()) + " nodes>"; });

  m.def("parse_group", [](const std::string& s) { return GroupKind::parse(s).to_string(); }, py::arg("spec"));
  m.def(
      "catalog",
      [](unsigned n_min, unsigned n_max) {
        std::vector<std::string> out;
        for (const auto& k : su2_catalog(n_min, n_max)) out.push_back(k.to_string());
        return out;
      },
      py::arg("n_min") = 2, py::arg("n_max") = 12);
  m.def(
      "mckay_graph", [](const std::string& spec) { return mckay_graph(GroupKind::parse(spec)); }, py::arg("group"));
  m.def(
      "graph_from_chartable",
      [](const std::string& csv, std::optional<std::string> v) {
        const CharacterTable t = io::parse_chartable_csv(csv);
        if (!v) v = t.v_label;
        if (!v) throw Error(ErrorKind::InvalidParameter, "no V given");
        return graph_from_chartable(t, *v);
      },
      py::arg("csv_text"), py::arg("v") = py::none());

  m.def(
      "series",
      [](const py::object& source, std::optional<std::string> node, std::size_t terms) {
        const RepGraph g = resolve(source);
        return series_dict(node ? series_cramer(g, *node) : series_cramer(g, 0), terms);
      },
      py::arg("source"), py::arg("node") = py::none(), py::arg("terms") = 20,
      "Rational function m^node(t) of a group spec or RepGraph, with its first coefficients.");
  m.def(
      "walk_counts",
      [](const py::object& source, std::size_t k_max) {
        py::list out;
        for (const auto& level : walk_counts(resolve(source), k_max)) out.append(to_py(level));
        return out;
      },
      py::arg("source"), py::arg("k_max"));
  m.def(
      "bratteli",
      [](const py::object& source, std::size_t levels) {
        const RepGraph g = resolve(source);
        py::list out;
        for (const auto& level : bratteli(g, levels)) {
          py::dict d;
          d["k"] = level.k;
          d["multiplicities"] = to_py(level.mults);
          d["z_dim"] = to_py(level.z_dim);
          out.append(d);
        }
        return out;
      },
      py::arg("source"), py::arg("levels"));
  m.def(
      "closed_form",
      [](const std::string& spec) {
        const ClosedFormSeries cf = closed_form(GroupKind::parse(spec));
        return py::make_tuple(to_py(cf.numerator), to_py(cf.denominator));
      },
      py::arg("group"));
  m.def(
      "exceptional_m0", [](const std::string& spec, unsigned n) { return to_py(exceptional_m0(GroupKind::parse(spec), n)); },
      py::arg("group"), py::arg("n"));
  m.def(
      "molien", [](const std::string& spec, std::size_t terms) {
        std::vector<double> out;
        for (long double v : molien_invariants(GroupKind::parse(spec), terms)) out.push_back(static_cast<double>(v));
        return out;
      },
      py::arg("group"), py::arg("terms"));
  m.def("chebyshev_T", [](unsigned n) { return to_py(cheb_T(n)); }, py::arg("n"));
  m.def("chebyshev_U", [](unsigned n) { return to_py(cheb_U(n)); }, py::arg("n"));
  m.def("chebyshev_p", [](unsigned n) { return to_py(cheb_p(n)); }, py::arg("n"));
  m.def(
      "verify",
      [](const std::string& suite, double tolerance, std::optional<std::string> group) {
        VerifyOptions opt;
        opt.tolerance = tolerance;
        if (group) opt.only = GroupKind::parse(*group);
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, opt);
        }
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["residual"] = c.exact ? py::object(py::none()) : py::object(py::float_(static_cast<double>(c.residual)));
          checks.append(d);
        }
        py::dict out;
        out["passed"] = report.passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("suite") = "all", py::arg("tolerance") = 1e-9, py::arg("group") = py::none());
}
