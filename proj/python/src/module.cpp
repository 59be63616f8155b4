#include "redword/edelman_greene.hpp"
#include "redword/factorization.hpp"
#include "redword/io.hpp"
#include "redword/markov.hpp"
#include "redword/stanley.hpp"
#include "redword/tableau.hpp"
#include "redword/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace redword;

namespace {

// Exact values cross the boundary as fractions.Fraction and Python int.
py::object to_py(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.str()); }

Rational from_py_rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::list to_py(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const RationalMatrix& m) {
  py::list out;
  for (const auto& row : m) out.append(to_py(row));
  return out;
}

ProbabilityMeasure measure_from(const py::object& probs) {
  if (py::isinstance<py::str>(probs)) return ProbabilityMeasure::parse(probs.cast<std::string>());
  std::vector<Rational> w;
  for (const auto& x : probs) {
    if (py::isinstance<py::float_>(x)) throw std::invalid_argument("probabilities must be exact; pass Fraction or 'a/b'");
    w.push_back(from_py_rational(x));
  }
  return ProbabilityMeasure(std::move(w));
}

// An element is "w0", "e", a word string, or a sequence of letters.
Permutation element_from(const CoxeterSystem& system, const py::object& element) {
  if (py::isinstance<py::str>(element)) return parse_element(system, element.cast<std::string>());
  const auto w = element.cast<Word>();
  for (Letter i : w) {
    if (!system.is_generator(i)) throw std::invalid_argument("letter " + std::to_string(i) + " is not a generator");
  }
  return system.evaluate(w);
}

py::dict expansion_dict(const SymFuncExpansion& f) {
  py::dict out;
  for (const auto& [p, c] : f.terms()) out[py::tuple(py::cast(p.parts()))] = to_py(c);
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["cases"] = r.cases;
  d["violations"] = r.violations;
  return d;
}

py::dict chain_dict(const TransitionMatrix& t) {
  py::dict d;
  d["states"] = t.states;
  d["matrix"] = to_py(t.entries);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact crystal, Edelman-Greene, Stanley and exchange-walk computations on reduced words.";

  py::class_<CoxeterSystem>(m, "CoxeterSystem")
      .def(py::init([](const std::string& type, int parameter) { return make_system(type, parameter); }),
           py::arg("type"), py::arg("parameter"))
      .def_static("symmetric", &CoxeterSystem::symmetric)
      .def_static("hypercube", &CoxeterSystem::hypercube)
      .def_static("dihedral", &CoxeterSystem::dihedral)
      .def_property_readonly("name", &CoxeterSystem::name)
      .def_property_readonly("rank", &CoxeterSystem::rank)
      .def_property_readonly("type", [](const CoxeterSystem& s) { return system_type(s); })
      .def("order", [](const CoxeterSystem& s) { return s.elements().size(); })
      .def("longest_word", [](const CoxeterSystem& s) { return s.reduced_words(s.longest()).front(); })
      .def("length", [](const CoxeterSystem& s, const py::object& e) { return s.length(element_from(s, e)); })
      .def("reduced_words", [](const CoxeterSystem& s, const py::object& e) { return s.reduced_words(element_from(s, e)); },
           py::arg("element") = "w0")
      .def("count_reduced_words",
           [](const CoxeterSystem& s, const py::object& e) { return s.count_reduced_words(element_from(s, e)); },
           py::arg("element") = "w0")
      .def("exchange", [](const CoxeterSystem& s, Letter i, const Word& w) { return s.exchange(i, w); })
      .def("__repr__", [](const CoxeterSystem& s) { return "CoxeterSystem(" + s.name() + ")"; });

  m.def("hook_length_count", [](const std::vector<int>& shape) { return to_py(hook_length_count(Partition(shape))); });

  m.def(
      "stanley",
      [](const CoxeterSystem& s, const py::object& e, const std::string& basis) {
        const auto w = element_from(s, e);
        if (basis == "schur") return expansion_dict(schur_expansion(s, w));
        if (basis == "monomial") return expansion_dict(stanley_monomial(s, w).expansion);
        throw std::invalid_argument("basis must be 'schur' or 'monomial'");
      },
      py::arg("system"), py::arg("element"), py::arg("basis") = "schur");

  m.def(
      "crystal_graph",
      [](const CoxeterSystem& s, const py::object& e, int factors) {
        const auto w = element_from(s, e);
        const auto g = build_crystal(s, w, factors > 0 ? factors : default_factor_count(s, w));
        py::dict d;
        std::vector<std::string> names;
        for (const auto& v : g.vertices) names.push_back(format_factorization(v));
        py::list edges;
        for (const auto& x : g.edges) edges.append(py::make_tuple(names[x.source], x.label, names[x.target]));
        std::vector<std::string> hw;
        for (auto h : g.highest_weight) hw.push_back(names[h]);
        d["vertices"] = names;
        d["edges"] = edges;
        d["highest_weights"] = hw;
        d["dot"] = to_dot<DecreasingFactorization>(g, format_factorization);
        return d;
      },
      py::arg("system"), py::arg("element"), py::arg("factors") = 0);

  auto crystal_op = [](bool raise) {
    return [raise](const CoxeterSystem& s, const std::string& text, int i) -> std::optional<std::string> {
      const auto f = parse_factorization(s, text);
      const auto r = raise ? crystal_e(f, i) : crystal_f(f, i);
      if (!r) return std::nullopt;
      return format_factorization(*r);
    };
  };
  m.def("crystal_e", crystal_op(true), py::arg("system"), py::arg("factorization"), py::arg("i"));
  m.def("crystal_f", crystal_op(false), py::arg("system"), py::arg("factorization"), py::arg("i"));

  m.def(
      "tableau_crystal_f",
      [](const std::vector<std::vector<int>>& t, int i) -> std::optional<std::vector<std::vector<int>>> {
        const auto r = tableau_crystal_f(Tableau(t), i);
        if (!r) return std::nullopt;
        return r->rows();
      },
      py::arg("tableau"), py::arg("i"));
  m.def(
      "tableau_crystal_e",
      [](const std::vector<std::vector<int>>& t, int i) -> std::optional<std::vector<std::vector<int>>> {
        const auto r = tableau_crystal_e(Tableau(t), i);
        if (!r) return std::nullopt;
        return r->rows();
      },
      py::arg("tableau"), py::arg("i"));

  m.def(
      "eg_insert",
      [](const py::object& input, int rank) {
        EGPair pair;
        if (py::isinstance<py::str>(input)) {
          const auto text = input.cast<std::string>();
          if (text.find('(') == std::string::npos) {
            pair = eg_insert_word(parse_word(text));
          } else {
            int n = rank;
            if (n <= 0) {
              Letter top = 0;
              for (char c : text) {
                if (c >= '1' && c <= '9') top = std::max<Letter>(top, c - '0');
              }
              n = top + 1;
            }
            pair = eg_insert(parse_factorization(CoxeterSystem::symmetric(n), text));
          }
        } else {
          pair = eg_insert_word(input.cast<Word>());
        }
        py::dict d;
        d["P"] = pair.P.rows();
        d["Q"] = pair.Q.rows();
        d["reading_word"] = p_transpose_reading_word(pair.P);
        return d;
      },
      py::arg("factors_or_word"), py::arg("rank") = 0);

  m.def("ck_components", [](const CoxeterSystem& s, const py::object& e) { return ck_components(s, element_from(s, e)); });

  m.def(
      "transition_matrix",
      [](const CoxeterSystem& s, const py::object& probs) { return chain_dict(build_chain(s, measure_from(probs))); },
      py::arg("system"), py::arg("probs"));

  m.def(
      "spectrum",
      [](const CoxeterSystem& s, const py::object& probs, bool as_printed) {
        const auto sp = spectrum(s, measure_from(probs),
                                 as_printed ? MultiplicityFormula::AsPrinted : MultiplicityFormula::Corrected);
        py::list out;
        for (const auto& t : sp) out.append(py::make_tuple(t.subset, to_py(t.eigenvalue), to_py(t.multiplicity)));
        return out;
      },
      py::arg("system"), py::arg("probs"), py::arg("as_printed") = false);

  m.def(
      "charpoly_matches",
      [](const CoxeterSystem& s, const py::object& probs) {
        const auto P = measure_from(probs);
        return characteristic_polynomial(build_chain(s, P).entries) ==
               predicted_characteristic_polynomial(spectrum(s, P));
      },
      py::arg("system"), py::arg("probs"));

  m.def(
      "stationary_distribution",
      [](const CoxeterSystem& s, const py::object& probs) { return to_py(stationary_distribution(s, measure_from(probs))); },
      py::arg("system"), py::arg("probs"));

  m.def(
      "simulate",
      [](const CoxeterSystem& s, const py::object& probs, std::uint64_t steps, std::uint64_t seed) {
        const auto P = measure_from(probs);
        const auto sim = simulate(s, P, steps, seed);
        py::dict d;
        d["states"] = sim.states;
        d["visits"] = sim.visits;
        d["frequencies"] = sim.frequencies;
        d["total_variation"] = total_variation(sim.frequencies, stationary_distribution(s, P));
        return d;
      },
      py::arg("system"), py::arg("probs"), py::arg("steps"), py::arg("seed") = 0);

  m.def(
      "tsetlin_chain", [](int n, const py::object& probs) { return chain_dict(tsetlin_chain(n, measure_from(probs))); },
      py::arg("n"), py::arg("probs"));

  m.def(
      "promotion_chain",
      [](int n, const std::vector<std::pair<int, int>>& relations, const py::object& probs) {
        return chain_dict(promotion_chain(NaturalPoset(n, relations), measure_from(probs)));
      },
      py::arg("n"), py::arg("relations"), py::arg("probs"));

  m.def(
      "verify",
      [](const std::string& suite, int max_rank) {
        py::list out;
        for (const auto& r : run_suite(suite, max_rank)) out.append(report_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("max_rank") = 4);

  m.def("transition_dot", &transition_dot);
}
