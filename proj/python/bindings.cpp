// Python module _bruhat. Objects cross the boundary as plain dicts and lists
// in the same layout as the JSON files the command line tool reads, with
// exact values as fraction strings.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bruhat/axioms.hpp"
#include "bruhat/error.hpp"
#include "bruhat/json_io.hpp"

namespace py = pybind11;
using namespace bruhat;

namespace {

Json to_json(const py::handle& obj) {
  return parse_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json types_json(const TypeVector& t) { return rationals_to_json(t.values()); }

Json columns_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& c : m.columns()) out.push_back(vector_to_json(c));
  return out;
}

PairingForm parse_form(const std::string& s) {
  if (s == "standard") return PairingForm::standard;
  if (s == "adjoint") return PairingForm::adjoint;
  throw DomainError("unknown pairing form \"" + s + "\"");
}

}  // namespace

PYBIND11_MODULE(_bruhat, m) {
  m.doc() = "Filtrations, buildings and norms for GL_n";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("valuation", [](const std::string& q, unsigned long p) { return padic_valuation(parse_rational(q), p); },
        py::arg("q"), py::arg("p"), "p-adic valuation of a fraction string; None for zero");

  m.def("filtration_type", [](const py::object& f) {
    return to_python(types_json(filtration_from_json(to_json(f)).type()));
  }, py::arg("filtration"));

  m.def("distance", [](const py::object& a, const py::object& b, const std::string& form) {
    const Filtration f1 = filtration_from_json(to_json(a));
    const Filtration f2 = filtration_from_json(to_json(b));
    const PairingForm pf = parse_form(form);
    const Rational d2 = distance_sq(f1, f2, pf);
    const Rational pair = pairing(f1, f2, pf);
    const TypeVector vd = vector_distance(f1, f2);
    Json j = {{"distance_sq", rational_to_json(d2)},
              {"pairing", rational_to_json(pair)},
              {"vector_distance", types_json(vd)}};
    if (norm_sq(f1, pf) != 0 && norm_sq(f2, pf) != 0) j["angle"] = angle(f1, f2, pf);
    return to_python(j);
  }, py::arg("f1"), py::arg("f2"), py::arg("form") = "standard");

  m.def("add_fil", [](const py::object& a, const py::object& b) {
    return to_python(filtration_to_json(add_fil(filtration_from_json(to_json(a)), filtration_from_json(to_json(b)))));
  }, py::arg("f1"), py::arg("f2"));

  m.def("retract", [](const py::object& f, const py::object& flag) {
    return to_python(filtration_to_json(retract(filtration_from_json(to_json(f)), flag_from_json(to_json(flag)))));
  }, py::arg("filtration"), py::arg("flag"));

  m.def("dominance_leq", [](const py::object& x, const py::object& y) {
    return dominance_leq(TypeVector::sorted(vector_from_json(to_json(x))),
                         TypeVector::sorted(vector_from_json(to_json(y))));
  }, py::arg("x"), py::arg("y"));

  m.def("cartan", [](const py::object& a, const py::object& b) {
    return to_python(types_json(cartan(norm_from_json(to_json(a)), norm_from_json(to_json(b)))));
  }, py::arg("alpha"), py::arg("beta"));

  m.def("adapt_norms", [](const py::object& a, const py::object& b) {
    const auto r = adapt_norms(norm_from_json(to_json(a)), norm_from_json(to_json(b)));
    return to_python({{"basis", columns_json(r.basis)},
                      {"alpha_weights", rationals_to_json(r.alpha_weights)},
                      {"beta_weights", rationals_to_json(r.beta_weights)}});
  }, py::arg("alpha"), py::arg("beta"));

  m.def("adapt_to_filtration", [](const py::object& a, const py::object& f) {
    const auto r = adapt_to_filtration(norm_from_json(to_json(a)), filtration_from_json(to_json(f)));
    return to_python({{"basis", columns_json(r.basis)},
                      {"norm_weights", rationals_to_json(r.norm_weights)},
                      {"fil_weights", rationals_to_json(r.fil_weights)}});
  }, py::arg("alpha"), py::arg("filtration"));

  m.def("add_fil_norm", [](const py::object& a, const py::object& f) {
    return to_python(norm_to_json(add_fil_norm(norm_from_json(to_json(a)), filtration_from_json(to_json(f)))));
  }, py::arg("alpha"), py::arg("filtration"));

  m.def("fixes", [](const py::object& g, const py::object& a) {
    return fixes(matrix_from_json(to_json(g)), norm_from_json(to_json(a)));
  }, py::arg("g"), py::arg("alpha"));

  m.def("loc", [](const py::object& a, const py::object& lattice) {
    return to_python(residue_filtration_to_json(loc(norm_from_json(to_json(a)), norm_from_json(to_json(lattice)))));
  }, py::arg("alpha"), py::arg("lattice"));

  m.def("moy_prasad", [](const py::object& a, const std::string& r) {
    const SplitNorm alpha = norm_from_json(to_json(a));
    const std::size_t n = alpha.dim();
    Json gens = Json::array();
    for (const auto& v : moy_prasad(hom_norm(alpha, alpha), parse_rational(r))) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(vector_to_json(Vector(v.begin() + static_cast<long>(i * n),
                                             v.begin() + static_cast<long>((i + 1) * n))));
      }
      gens.push_back(std::move(rows));
    }
    return to_python(gens);
  }, py::arg("alpha"), py::arg("r") = "0", "generators of the ball of radius r in End(V), as n x n matrices");

  m.def("fischer_courant", [](const py::object& a, const py::object& b) {
    return fischer_courant(euclidean_from_json(to_json(a)), euclidean_from_json(to_json(b)));
  }, py::arg("alpha"), py::arg("beta"));

  m.def("dn", [](const py::object& a, const py::object& b) {
    return dn(euclidean_from_json(to_json(a)), euclidean_from_json(to_json(b)));
  }, py::arg("alpha"), py::arg("beta"));

  m.def("run_axioms", [](const std::string& instance, const std::string& control, std::size_t n, unsigned long p,
                         std::size_t trials, std::uint64_t seed, std::optional<double> tolerance) {
    std::vector<AxiomReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_named_suite(instance, control, n, p, trials, seed, tolerance);
    }
    return to_python(parse_json(report_json(reports)));
  }, py::arg("instance") = "tits", py::arg("control") = "", py::arg("n") = 3, py::arg("p") = 2,
        py::arg("trials") = 100, py::arg("seed") = 0, py::arg("tolerance") = py::none());
}
