#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coreideal/report.hpp"

namespace py = pybind11;
using namespace coreideal;

namespace {

GeneralElementConfig config(std::uint64_t seed, unsigned repeats, unsigned window) {
  GeneralElementConfig cfg;
  cfg.seed = seed;
  cfg.repeats = repeats;
  cfg.window = window;
  return cfg;
}

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_coreideal, m) {
  m.doc() = "Reductions, K_n, L_n and cores of ideals in quotients of GF(p^e)[x]";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<AlgebraError>(m, "AlgebraError", error);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", error);
  py::register_exception<GenericityFailure>(m, "GenericityFailure", error);

  py::class_<Ideal>(m, "Ideal")
      .def("basis", &Ideal::basis_strings, "reduced Groebner basis as strings")
      .def("gens", [](const Ideal& a) {
        std::vector<std::string> out;
        for (const auto& g : a.gens()) out.push_back(g.to_string());
        return out;
      })
      .def("contains", py::overload_cast<const Ideal&>(&Ideal::contains, py::const_))
      .def("equals", &Ideal::equals)
      .def("is_unit", &Ideal::is_unit)
      .def("is_zero", &Ideal::is_zero)
      .def("__eq__", &Ideal::equals)
      .def("__add__", &sum)
      .def("__mul__", &product)
      .def("__pow__", [](const Ideal& a, unsigned n) { return power(a, n); })
      .def("__and__", &intersect)
      .def("__truediv__", py::overload_cast<const Ideal&, const Ideal&>(&colon))
      .def("__repr__", [](const Ideal& a) {
        std::string s = "Ideal(";
        for (std::size_t k = 0; k < a.num_gens(); ++k) s += (k ? ", " : "") + a.gens()[k].to_string();
        return s + ")";
      });

  py::class_<SpecFile>(m, "Spec")
      .def_property_readonly("ring", [](const SpecFile& s) { return s.ring->to_string(); })
      .def_property_readonly("field_size", [](const SpecFile& s) { return s.ring->field().size(); })
      .def_property_readonly("names", [](const SpecFile& s) {
        std::vector<std::string> out;
        for (const auto& [name, _] : s.ideals) out.push_back(name);
        return out;
      })
      .def("ideal", &SpecFile::ideal, py::arg("name") = "I", py::return_value_policy::copy)
      .def("make_ideal", [](const SpecFile& s, const std::string& gens) {
        return Ideal(s.ring, parse_polynomial_list(gens, s.ring->poly_ring()));
      }, py::arg("gens"))
      .def("__str__", &print_spec);

  m.def("parse_spec", [](const std::string& text, std::optional<std::uint32_t> field_ext) {
    return parse_spec(text, field_ext);
  }, py::arg("text"), py::arg("field_ext") = py::none());
  m.def("load_spec", &load_spec, py::arg("path"), py::arg("field_ext") = py::none());

  m.def("reduction_number", &reduction_number, py::arg("J"), py::arg("I"), py::arg("n_max") = 20);
  m.def("minimal_reduction", [](const Ideal& i, std::uint64_t seed) {
    const auto d = general_minimal_reduction(i, seed, GeneralElementConfig{});
    return py::make_tuple(d.j, d.r);
  }, py::arg("I"), py::arg("seed") = 0, "general minimal reduction J and r_J(I)");
  m.def("s_invariant", [](const Ideal& i, const Ideal& j, std::uint64_t seed) {
    return s_invariant(i, j, GeneralElementConfig{}.with_seed(seed));
  }, py::arg("I"), py::arg("J"), py::arg("seed") = 0);
  m.def("kn", [](const Ideal& j, const Ideal& i, unsigned n, const std::string& method,
                 std::uint64_t seed) {
    if (method == "binomial") return kn_binomial(j, i, n);
    if (method == "bruteforce") return kn_bruteforce(j, i, n);
    if (method != "general") throw ParseError("unknown method '" + method + "'", 1, 1);
    return kn_general(j, i, n, GeneralElementConfig{}.with_seed(seed));
  }, py::arg("J"), py::arg("I"), py::arg("n"), py::arg("method") = "general", py::arg("seed") = 0);
  m.def("ln", [](const Ideal& j, const Ideal& i, unsigned n, std::uint64_t seed) {
    return ln_ideal(j, i, n, GeneralElementConfig{}.with_seed(seed));
  }, py::arg("J"), py::arg("I"), py::arg("n"), py::arg("seed") = 0);
  m.def("adjoint_colon", &adjoint_colon, py::arg("J"), py::arg("I"), py::arg("n"));
  m.def("core", [](const Ideal& i, unsigned n, std::uint64_t seed, unsigned repeats,
                   unsigned window) {
    py::gil_scoped_release release;
    return core(i, n, config(seed, repeats, window), 1).core;
  }, py::arg("I"), py::arg("n") = 0, py::arg("seed") = 0, py::arg("repeats") = 2,
        py::arg("window") = 3);

  m.def("run", [](const std::string& command, const SpecFile& spec, const std::string& ideal,
                  std::optional<unsigned> n, std::optional<std::uint64_t> seed,
                  std::optional<std::string> j, const std::string& method) {
    CommandOptions opts;
    opts.ideal = ideal;
    opts.n = n;
    opts.seed = seed;
    opts.j = j;
    opts.method = method;
    std::string text;
    {
      py::gil_scoped_release release;
      text = to_json(run_command(command, spec, opts)).dump();
    }
    return loads(text);
  }, py::arg("command"), py::arg("spec"), py::arg("ideal") = "I", py::arg("n") = py::none(),
        py::arg("seed") = py::none(), py::arg("J") = py::none(), py::arg("method") = "general",
        "run one CLI command; returns the JSON report as a dict");
  m.attr("commands") = command_names();
}
