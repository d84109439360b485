#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "omuco/fixtures.hpp"
#include "omuco/greedy.hpp"
#include "omuco/io.hpp"
#include "omuco/rhs_enum.hpp"
#include "omuco/selftest.hpp"
#include "omuco/solver.hpp"

namespace py = pybind11;
using namespace omuco;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.num(), r.den());
}

Rational from_python(const py::handle& v) { return Rational::parse(py::str(v).cast<std::string>()); }

py::tuple to_tuple(const OutcomeVector& z) {
  py::tuple t(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) t[k] = to_fraction(z.values[k]);
  return t;
}

std::optional<OrdinalObjective> ordinal_from(const std::optional<std::vector<int>>& cats, std::optional<int> k) {
  if (!cats) return std::nullopt;
  OrdinalObjective obj;
  obj.assignment = *cats;
  obj.categories = k ? *k : (cats->empty() ? 1 : *std::max_element(cats->begin(), cats->end()));
  return obj;
}

// A solved front together with the instance it belongs to.
struct Front {
  Instance instance;
  ParetoResult result;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact nondominated sets for problems with ordinal objectives and a sum objective";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](int alpha, int beta, int gamma, std::optional<std::vector<int>> tilde,
                       std::optional<std::vector<int>> hat, std::optional<py::list> f, std::optional<int> w,
                       std::optional<int> ktilde, std::optional<int> khat) {
             Instance inst;
             inst.alpha = sense_from_int(alpha);
             inst.beta = sense_from_int(beta);
             inst.gamma = sense_from_int(gamma);
             inst.tilde = ordinal_from(tilde, ktilde);
             inst.hat = ordinal_from(hat, khat);
             if (f) {
               std::vector<Rational> values;
               for (auto v : *f) values.push_back(from_python(v));
               inst.f = std::move(values);
             }
             inst.n = tilde ? static_cast<int>(tilde->size())
                            : hat ? static_cast<int>(hat->size()) : inst.f ? static_cast<int>(inst.f->size()) : 0;
             inst.cardinality = w;
             auto report = validate(inst);
             if (!report.valid()) throw InvalidInstance(report);
             return inst;
           }),
           py::kw_only(), py::arg("alpha") = 0, py::arg("beta") = 0, py::arg("gamma") = 0,
           py::arg("tilde") = py::none(), py::arg("hat") = py::none(), py::arg("f") = py::none(),
           py::arg("w") = py::none(), py::arg("ktilde") = py::none(), py::arg("khat") = py::none())
      .def_static("from_text", &parse_instance, py::arg("text"))
      .def("to_text", &serialize_instance)
      .def_readonly("n", &Instance::n)
      .def_property_readonly("senses", [](const Instance& i) {
        return py::make_tuple(sign(i.alpha), sign(i.beta), sign(i.gamma));
      })
      .def_property_readonly("cardinality", [](const Instance& i) { return i.cardinality; })
      .def_property_readonly("tilde", [](const Instance& i) {
        return i.tilde ? std::optional<std::vector<int>>(i.tilde->assignment) : std::nullopt;
      })
      .def_property_readonly("hat", [](const Instance& i) {
        return i.hat ? std::optional<std::vector<int>>(i.hat->assignment) : std::nullopt;
      })
      .def_property_readonly("f", [](const Instance& i) -> py::object {
        if (!i.f) return py::none();
        py::list out;
        for (const auto& v : *i.f) out.append(to_fraction(v));
        return out;
      })
      .def("outcome", [](const Instance& i, const std::string& x) {
        SolutionVector s(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) s.bits[k] = x[k] == '1';
        if (s.size() != static_cast<std::size_t>(i.n)) throw std::invalid_argument("selection length differs from n");
        return to_tuple(outcome(i, s));
      }, py::arg("x"))
      .def_property_readonly("labels", &outcome_labels)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.n) + " senses=(" + std::to_string(sign(i.alpha)) + "," +
               std::to_string(sign(i.beta)) + "," + std::to_string(sign(i.gamma)) + ")>";
      });

  py::class_<Front>(m, "Front")
      .def_property_readonly("points", [](const Front& fr) {
        py::list out;
        for (const auto& z : fr.result.nondominated) out.append(to_tuple(z));
        return out;
      })
      .def_property_readonly("solutions", [](const Front& fr) {
        std::vector<std::string> out;
        for (const auto& x : fr.result.representatives) out.push_back(x.to_string());
        return out;
      })
      .def_property_readonly("stats", [](const Front& fr) {
        const auto& s = fr.result.stats;
        py::dict d;
        d["subproblems"] = s.subproblems;
        d["feasible"] = s.feasible;
        d["candidates"] = s.candidates;
        d["dominated_removed"] = s.dominated_removed;
        d["duplicates_collapsed"] = s.duplicates_collapsed;
        d["wall_seconds"] = s.wall_seconds;
        return d;
      })
      .def("to_csv", [](const Front& fr) { return emit_result(fr.result, fr.instance, OutputFormat::kCsv); })
      .def("to_table", [](const Front& fr) { return emit_result(fr.result, fr.instance, OutputFormat::kTable); })
      .def("__len__", [](const Front& fr) { return fr.result.size(); });

  m.def(
      "solve",
      [](const Instance& inst, const std::string& algorithm, std::optional<py::object> augment, int workers,
         std::optional<int> cardinality) {
        SolverConfig cfg;
        cfg.algorithm = algorithm_from_string(algorithm);
        cfg.workers = workers;
        cfg.cardinality = cardinality;
        Instance effective = inst;
        if (cardinality) effective.cardinality = cardinality;
        if (augment && !augment->is_none()) {
          std::string text = py::str(*augment);
          cfg.augmentation = text == "auto" ? default_augmentation(effective) : Rational::parse(text);
        }
        ParetoResult res;
        {
          py::gil_scoped_release release;
          res = solve(inst, cfg);
        }
        return Front{effective, std::move(res)};
      },
      py::arg("instance"), py::kw_only(), py::arg("algorithm") = "auto", py::arg("augment") = py::none(),
      py::arg("workers") = 1, py::arg("cardinality") = py::none());

  m.def(
      "oracle_solve", [](const Instance& inst, int limit) { return Front{inst, oracle_solve(inst, limit)}; },
      py::arg("instance"), py::arg("max_items") = 20);

  m.def("greedy_candidates", [](const Instance& inst) {
    py::list out;
    for (const auto& c : greedy_candidates(inst)) out.append(py::make_tuple(c.solution.to_string(), to_tuple(c.outcome)));
    return out;
  });

  m.def(
      "generate",
      [](int n, int alpha, int beta, int gamma, int ktilde, int khat, std::optional<int> w, std::int64_t fmin,
         std::int64_t fmax, std::uint64_t seed) {
        GeneratorSpec spec{n, ktilde, khat, alpha, beta, gamma, w, fmin, fmax, seed};
        return generate_instance(spec);
      },
      py::kw_only(), py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("ktilde") = 1,
      py::arg("khat") = 1, py::arg("w") = py::none(), py::arg("fmin") = 0, py::arg("fmax") = 10,
      py::arg("seed") = 0);

  m.def("enumerate_U_w", &enumerate_U_w, py::arg("categories"), py::arg("n"), py::arg("w"));
  m.def("enumerate_U", &enumerate_U, py::arg("categories"), py::arg("n"));
  m.def("count_Ue", &count_Ue, py::arg("instance"));
  m.def("dominates", [](const std::vector<py::object>& a, const std::vector<py::object>& b) {
    OutcomeVector za, zb;
    for (const auto& v : a) za.values.push_back(from_python(v));
    for (const auto& v : b) zb.values.push_back(from_python(v));
    if (za.size() != zb.size()) throw std::invalid_argument("outcome vectors differ in length");
    return dominates(za, zb);
  });
  m.def("selftest", [] {
    std::ostringstream out;
    int failures = run_selftest(out);
    return py::make_tuple(failures, out.str());
  });

  auto fx = m.def_submodule("fixtures", "Small reference instances");
  fx.def("six_item_example", &fixtures::six_item_example);
  fx.def("instance_a", &fixtures::instance_a);
  fx.def("instance_b", &fixtures::instance_b);
}
