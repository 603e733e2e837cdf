#include "bicumulant/json_io.hpp"
#include "bicumulant/laws.hpp"
#include "bicumulant/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bicumulant;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Law single_law(const std::string& name) {
  auto laws = parse_laws(name);
  if (laws.size() != 1) throw std::invalid_argument("'" + name + "' names several laws; pick one");
  return laws.front();
}

Shape checked(const std::vector<int>& sizes, int cap) {
  Shape s(sizes);
  if (s.total() > cap) throw CapExceeded(s.total(), cap);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cumulants with two products: expansions, enumerations and law checks.";

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("DEFAULT_CAP") = default_cap;

  m.def("law_names", &law_names);

  m.def("canonical", [](const std::string& text) { return render_text(parse_expr(text)); },
        py::arg("text"), "Canonical text of an expression.");

  m.def(
      "kappa",
      [](const std::vector<std::string>& args, bool star) {
        std::vector<Expr> xs;
        for (const auto& a : args) xs.push_back(parse_expr(a));
        CumulantEngine e;
        return render_text(star ? e.kappa_star(xs) : e.kappa(xs));
      },
      py::arg("args"), py::arg("star") = false,
      "Cumulant of parsed expressions; star=True gives the dual cumulant.");

  m.def(
      "expand",
      [](const std::string& law, const std::vector<int>& shape, int cap) {
        CumulantEngine e;
        auto sides = law_sides(e, single_law(law), checked(shape, cap));
        return py::make_tuple(render_text(sides.lhs), render_text(sides.rhs));
      },
      py::arg("law"), py::arg("shape"), py::arg("cap") = default_cap,
      "Both sides of an expression law as canonical text.");

  m.def(
      "verify",
      [](const std::string& law, const std::vector<int>& shape, int cap) {
        LawReport r;
        {
          py::gil_scoped_release release;
          r = verify(single_law(law), Shape(shape), cap);
        }
        return to_python(to_json(r));
      },
      py::arg("law"), py::arg("shape"), py::arg("cap") = default_cap);

  m.def(
      "verify_sweep",
      [](const std::string& law, int max_total, unsigned threads) {
        std::vector<LawReport> rs;
        {
          py::gil_scoped_release release;
          rs = verify_sweep(single_law(law), max_total, default_cap, threads);
        }
        Json out = Json::array();
        for (const auto& r : rs) out.push_back(to_json(r));
        return to_python(out);
      },
      py::arg("law"), py::arg("max_total"), py::arg("threads") = 0);

  m.def(
      "verify_paths", [](int arity, int max_coord) { return to_python(to_json(verify_paths(arity, max_coord))); },
      py::arg("arity"), py::arg("max_coord"));

  m.def(
      "model_check",
      [](const std::string& law, const std::vector<int>& shape, std::uint64_t seed, int trials, int max_degree) {
        return to_python(to_json(model_check(single_law(law), Shape(shape), seed, trials, max_degree)));
      },
      py::arg("law"), py::arg("shape"), py::arg("seed") = 0, py::arg("trials") = 20, py::arg("max_degree") = 3);

  m.def(
      "forests",
      [](const std::vector<int>& shape, const std::string& filter, int cap) {
        Shape s = checked(shape, cap);
        py::list out;
        for (const ReducedForest& f : enumerate_reduced_forests(s.slots())) {
          if (filter == "mixing" && !is_mixing_forest(f, s)) continue;
          if (filter == "strongly-mixing" && !is_strongly_mixing_forest(f, s)) continue;
          if (filter != "all" && filter != "mixing" && filter != "strongly-mixing")
            throw std::invalid_argument("unknown filter '" + filter + "'");
          auto w = w_of_forest(f, s);
          out.append(py::make_tuple(render_forest_text(f), w ? py::object(py::int_(*w)) : py::none()));
        }
        return out;
      },
      py::arg("shape"), py::arg("filter") = "all", py::arg("cap") = default_cap,
      "(text, w) per reduced forest; w is None for non-mixing forests.");

  m.def(
      "partitions",
      [](const std::vector<int>& shape, const std::string& filter, int cap) {
        Shape s = checked(shape, cap);
        py::list out;
        for (const SetPartition& nu : enumerate_set_partitions(s.slots())) {
          if (filter == "mixing" && !is_mixing_partition(nu, s)) continue;
          if (filter == "strongly-mixing" && !is_strongly_mixing(nu, s)) continue;
          out.append(to_python(to_json(nu)));
        }
        return out;
      },
      py::arg("shape"), py::arg("filter") = "all", py::arg("cap") = default_cap);
}
