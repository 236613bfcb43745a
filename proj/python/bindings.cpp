#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arrchow/chow.hpp"
#include "arrchow/cli.hpp"
#include "arrchow/permstats.hpp"
#include "arrchow/suites.hpp"
#include "arrchow/topegraph.hpp"

namespace py = pybind11;
using namespace arrchow;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeffs(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::list entries(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& c : v) out.append(to_py(c));
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "a") return Family::A;
  if (name == "b") return Family::B;
  if (name == "d") return Family::D;
  if (name == "dns") return Family::Dns;
  throw py::value_error("family must be one of a, b, d, dns");
}

SignVector all_plus(const Arrangement& a) { return SignVector{std::vector<int8_t>(a.size(), 1)}; }

// Runs the CLI in-process and returns (status, stdout, stderr).
py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"arrchow"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status;
  {
    py::gil_scoped_release release;
    status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of reflection arrangements and their Chow polynomials";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init<int, IntMatrix>(), py::arg("dim"), py::arg("normals"))
      .def_static("family", [](const std::string& f, int n, std::optional<int> s) { return make_family(parse_family(f), n, s); },
                  py::arg("family"), py::arg("n"), py::arg("s") = py::none())
      .def_static("from_file", &read_arrangement_file, py::arg("path"))
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("rank", &Arrangement::rank)
      .def_property_readonly("normals", &Arrangement::normals)
      .def("__len__", &Arrangement::size)
      .def("chambers", [](const Arrangement& a, int jobs) {
             std::vector<std::string> out;
             for (const auto& c : chambers(a, jobs)) out.push_back(c.to_string());
             return out;
           }, py::arg("jobs") = 1)
      .def("f_vector", [](const Arrangement& a, int jobs) { return f_vector(a, jobs); }, py::arg("jobs") = 1)
      .def("h_polynomial", [](const Arrangement& a, int jobs) {
             const TopeGraph g = build_tope_graph(a, jobs);
             SignVector base = all_plus(a);
             if (g.index_of(base) < 0) base = g.vertices.front();
             return coeffs(h_via_indegree(direct(g, base)));
           }, py::arg("jobs") = 1)
      .def("characteristic_polynomial", [](const Arrangement& a) {
             const FlatLattice lat = intersection_lattice(a);
             return coeffs(characteristic_poly(lat.lattice, 0, lat.lattice.top()));
           })
      .def("chow_polynomial", [](const Arrangement& a) { return coeffs(chow_recursive(intersection_lattice(a).lattice)); })
      .def("__repr__", [](const Arrangement& a) {
        return "<Arrangement dim=" + std::to_string(a.dim()) + " hyperplanes=" + std::to_string(a.size()) + ">";
      });

  m.def("gamma_vector", [](const std::vector<long>& h) {
          std::vector<BigInt> c(h.begin(), h.end());
          return entries(h_to_gamma(IntPolynomial(c)).entries);
        }, py::arg("h"), "gamma-vector of a palindromic h-polynomial, coefficients ascending");
  m.def("chow_dns", [](int n, int s, int jobs) { return coeffs(chow_dns(n, s, jobs)); }, py::arg("n"), py::arg("s"),
        py::arg("jobs") = 1);
  m.def("chow_type_a", [](int n) { return coeffs(chow_type_a(n)); }, py::arg("n"));
  m.def("chow_type_b", [](int n) { return coeffs(chow_type_b(n)); }, py::arg("n"));
  m.def("h_b_closed", [](int n) { return coeffs(h_b_closed(n)); }, py::arg("n"));
  m.def("h_d_closed", [](int n) { return coeffs(h_d_closed(n)); }, py::arg("n"));
  m.def("gamma_increment", [](int n) { return entries(gamma_increment_closed(n)); }, py::arg("n"));
  m.def("verify", [](const std::string& suite, int n_max, int jobs) {
          std::vector<CheckReport> reports;
          {
            py::gil_scoped_release release;
            reports = run_verify_suite(suite, n_max, jobs);
          }
          py::list out;
          for (const auto& r : reports) {
            py::dict d;
            d["check"] = r.check;
            d["status"] = r.passed ? "pass" : "fail";
            d["details"] = r.details;
            out.append(d);
          }
          return out;
        }, py::arg("suite") = "all", py::arg("n_max") = 4, py::arg("jobs") = 1);
  m.def("run_cli", &run_cli, py::arg("args"));
}
