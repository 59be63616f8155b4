#pragma once

// JSON and DOT serialization for the value types exposed by the command line
// tool and the Python module. Every encode has a matching decode with
// decode(encode(x)) == x.

#include "redword/coxeter.hpp"
#include "redword/crystal_graph.hpp"
#include "redword/edelman_greene.hpp"
#include "redword/factorization.hpp"
#include "redword/markov.hpp"
#include "redword/symfunc.hpp"
#include "redword/tableau.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace redword {

using Json = nlohmann::json;

// Type letters: "A" with parameter n is S_n, "H" with parameter n is the
// hypercube group (Z/2)^n, "I" with parameter m is the dihedral group I_2(m).
CoxeterSystem make_system(const std::string& type, int parameter);
std::string system_type(const CoxeterSystem& system);

/// "w0", "e", or a word in the generators (need not be reduced).
Permutation parse_element(const CoxeterSystem& system, const std::string& text);

Json encode(const Rational& q);  // "a/b" or "a"
Json encode(const Integer& z);   // number when it fits 64 bits, else decimal string
Json encode(const Word& w);
Json encode(const Permutation& p);
Json encode(const Partition& p);
Json encode(const Tableau& t);
Json encode(const CoxeterSystem& system);
Json encode(const DecreasingFactorization& f, const CoxeterSystem& system);
Json encode(const SymFuncExpansion& f);
Json encode(const ProbabilityMeasure& P);
Json encode(const TransitionMatrix& t);
Json encode(const std::vector<SpectrumTerm>& spectrum);
Json encode(const EGPair& pair);
Json encode(const VerificationReport& report);

Rational decode_rational(const Json& j);
Integer decode_integer(const Json& j);
Word decode_word(const Json& j);
Permutation decode_permutation(const Json& j);
Partition decode_partition(const Json& j);
Tableau decode_tableau(const Json& j);
CoxeterSystem decode_system(const Json& j);
DecreasingFactorization decode_factorization(const Json& j);  // system taken from the "system" field
SymFuncExpansion decode_symfunc(const Json& j);
ProbabilityMeasure decode_measure(const Json& j);
TransitionMatrix decode_transition_matrix(const Json& j);
std::vector<SpectrumTerm> decode_spectrum(const Json& j);
EGPair decode_eg_pair(const Json& j);

// DOT digraphs. Edge colors follow the label; labels are quoted strings.
std::string dot_quote(const std::string& s);
std::string label_color(int label);

template <class V>
std::string to_dot(const CrystalGraph<V>& g, const std::function<std::string(const V&)>& name,
                   const std::string& graph_name = "crystal") {
  std::string out = "digraph " + graph_name + " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + dot_quote(name(g.vertices[v])) + "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + " [label=" +
           dot_quote(std::to_string(e.label)) + ", color=" + dot_quote(label_color(e.label)) + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const CKGraph& g);
/// Exchange walk on Red(w0); one edge per generator, self-loops included.
std::string transition_dot(const CoxeterSystem& system);
/// Any chain: one edge per nonzero entry, labelled with the probability.
std::string to_dot(const TransitionMatrix& t);

}  // namespace redword
