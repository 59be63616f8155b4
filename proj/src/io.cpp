#include "redword/io.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace redword {

CoxeterSystem make_system(const std::string& type, int parameter) {
  if (type == "A") return CoxeterSystem::symmetric(parameter);
  if (type == "H") return CoxeterSystem::hypercube(parameter);
  if (type == "I") return CoxeterSystem::dihedral(parameter);
  throw std::invalid_argument("unknown system type '" + type + "' (expected A, H or I)");
}

std::string system_type(const CoxeterSystem& system) {
  switch (system.kind()) {
    case CoxeterKind::Symmetric: return "A";
    case CoxeterKind::Hypercube: return "H";
    case CoxeterKind::Dihedral: return "I";
  }
  return "?";
}

Permutation parse_element(const CoxeterSystem& system, const std::string& text) {
  if (text == "w0") return system.longest();
  const Word w = parse_word(text);
  for (Letter i : w) {
    if (!system.is_generator(i)) {
      throw std::invalid_argument("letter " + std::to_string(i) + " is not a generator of " + system.name());
    }
  }
  return system.evaluate(w);
}

// ---------------------------------------------------------------------------
// encode

Json encode(const Rational& q) { return to_string(q); }

Json encode(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

Json encode(const Word& w) { return Json(w); }

Json encode(const Permutation& p) { return Json(p.one_line()); }

Json encode(const Partition& p) { return Json(p.parts()); }

Json encode(const Tableau& t) { return Json(t.rows()); }

Json encode(const CoxeterSystem& system) {
  return {{"type", system_type(system)}, {"parameter", system.parameter()}, {"name", system.name()}};
}

Json encode(const DecreasingFactorization& f, const CoxeterSystem& system) {
  Json factors = Json::array();
  for (int k = f.factor_count(); k >= 1; --k) factors.push_back(f.factor(k));
  return {{"system", encode(system)},
          {"factors", factors},
          {"text", format_factorization(f)},
          {"weight", f.weight()}};
}

Json encode(const SymFuncExpansion& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", encode(p)}, {"coeff", encode(c)}});
  return {{"basis", basis_name(f.basis())}, {"terms", terms}, {"text", to_string(f)}};
}

Json encode(const ProbabilityMeasure& P) {
  Json out = Json::array();
  for (const auto& w : P.weights()) out.push_back(encode(w));
  return out;
}

Json encode(const TransitionMatrix& t) {
  Json states = Json::array();
  for (const auto& s : t.states) states.push_back(s);
  Json rows = Json::array();
  for (const auto& row : t.entries) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(encode(x));
    rows.push_back(r);
  }
  return {{"states", states}, {"entries", rows}};
}

Json encode(const std::vector<SpectrumTerm>& spectrum) {
  Json out = Json::array();
  for (const auto& t : spectrum) {
    out.push_back({{"subset", t.subset}, {"eigenvalue", encode(t.eigenvalue)}, {"multiplicity", encode(t.multiplicity)}});
  }
  return out;
}

Json encode(const EGPair& pair) { return {{"P", encode(pair.P)}, {"Q", encode(pair.Q)}}; }

Json encode(const VerificationReport& report) {
  return {{"name", report.name}, {"passed", report.passed}, {"cases", report.cases}, {"violations", report.violations}};
}

// ---------------------------------------------------------------------------
// decode

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  return Integer(j.get<std::string>());
}

Word decode_word(const Json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  return j.get<Word>();
}

Permutation decode_permutation(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

Partition decode_partition(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Tableau decode_tableau(const Json& j) { return Tableau(j.get<std::vector<std::vector<int>>>()); }

CoxeterSystem decode_system(const Json& j) {
  return make_system(j.at("type").get<std::string>(), j.at("parameter").get<int>());
}

DecreasingFactorization decode_factorization(const Json& j) {
  const CoxeterSystem system = decode_system(j.at("system"));
  return DecreasingFactorization::from_display(system, j.at("factors").get<std::vector<std::vector<Letter>>>());
}

SymFuncExpansion decode_symfunc(const Json& j) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "monomial" && basis != "schur") throw std::invalid_argument("unknown basis " + basis);
  SymFuncExpansion out(basis == "schur" ? Basis::Schur : Basis::Monomial);
  for (const auto& term : j.at("terms")) out.add(decode_partition(term.at("partition")), decode_integer(term.at("coeff")));
  return out;
}

ProbabilityMeasure decode_measure(const Json& j) {
  std::vector<Rational> weights;
  for (const auto& x : j) weights.push_back(decode_rational(x));
  return ProbabilityMeasure(std::move(weights));
}

TransitionMatrix decode_transition_matrix(const Json& j) {
  TransitionMatrix t;
  for (const auto& s : j.at("states")) t.states.push_back(decode_word(s));
  for (const auto& row : j.at("entries")) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(decode_rational(x));
    if (r.size() != t.states.size()) throw std::invalid_argument("transition matrix row has the wrong length");
    t.entries.push_back(std::move(r));
  }
  if (t.entries.size() != t.states.size()) throw std::invalid_argument("transition matrix is not square");
  return t;
}

std::vector<SpectrumTerm> decode_spectrum(const Json& j) {
  std::vector<SpectrumTerm> out;
  for (const auto& t : j) {
    out.push_back({t.at("subset").get<std::vector<Letter>>(), decode_rational(t.at("eigenvalue")),
                   decode_integer(t.at("multiplicity"))});
  }
  return out;
}

EGPair decode_eg_pair(const Json& j) { return {decode_tableau(j.at("P")), decode_tableau(j.at("Q"))}; }

// ---------------------------------------------------------------------------
// DOT

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string label_color(int label) {
  static const char* palette[] = {"blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  return palette[(label - 1 + 8) % 8];
}

std::string to_dot(const CKGraph& g) {
  static const char* names[] = {"braid", "bac-bca", "cab-acb"};
  std::string out = "digraph coxeter_knuth {\n  edge [dir=none];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + dot_quote(format_word(g.vertices[v])) + "];\n";
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    out += "  n" + std::to_string(g.edges[k].first) + " -> n" + std::to_string(g.edges[k].second) +
           " [label=" + dot_quote(names[static_cast<int>(g.kinds[k])]) + "];\n";
  }
  return out + "}\n";
}

std::string transition_dot(const CoxeterSystem& system) {
  const auto states = system.reduced_words(system.longest());
  std::string out = "digraph exchange_walk {\n";
  for (std::size_t v = 0; v < states.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + dot_quote(format_word(states[v])) + "];\n";
  }
  for (const auto& e : transition_edges(system)) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=" +
           dot_quote(std::to_string(e.label)) + ", color=" + dot_quote(label_color(e.label)) + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const TransitionMatrix& t) {
  std::string out = "digraph chain {\n";
  for (std::size_t v = 0; v < t.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + dot_quote(format_word(t.states[v])) + "];\n";
  }
  for (std::size_t from = 0; from < t.size(); ++from) {
    for (std::size_t to = 0; to < t.size(); ++to) {
      if (t.entries[to][from] == 0) continue;
      out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + " [label=" +
             dot_quote(to_string(t.entries[to][from])) + "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace redword
