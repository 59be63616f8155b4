#include "redword/io.hpp"
#include "redword/stanley.hpp"

#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

using namespace redword;

namespace {

// Minimal DOT checker for the subset we emit: a digraph header, node
// statements with a quoted label, edge statements between declared nodes,
// and a closing brace. Returns {nodes, edges}; throws on anything else.
std::pair<int, int> parse_dot(const std::string& text) {
  static const std::regex header(R"(^digraph [A-Za-z_][A-Za-z0-9_]* \{$)");
  static const std::regex attr(R"(^  (edge|node|graph) \[[^\]]*\];$)");
  static const std::regex node(R"x(^  (n[0-9]+) \[label="(?:[^"\\]|\\.)*"\];$)x");
  static const std::regex edge(R"x(^  (n[0-9]+) -> (n[0-9]+) \[label="(?:[^"\\]|\\.)*"(?:, color="[a-z]+")?\];$)x");
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (!std::regex_match(line, header)) throw std::runtime_error("bad header: " + line);
  std::set<std::string> nodes;
  int edges = 0;
  bool closed = false;
  std::smatch m;
  while (std::getline(in, line)) {
    if (closed) throw std::runtime_error("content after closing brace");
    if (line == "}") {
      closed = true;
    } else if (std::regex_match(line, m, node)) {
      if (!nodes.insert(m[1]).second) throw std::runtime_error("duplicate node " + m[1].str());
    } else if (std::regex_match(line, m, edge)) {
      if (!nodes.count(m[1]) || !nodes.count(m[2])) throw std::runtime_error("edge to undeclared node: " + line);
      ++edges;
    } else if (!std::regex_match(line, attr)) {
      throw std::runtime_error("unrecognized line: " + line);
    }
  }
  if (!closed) throw std::runtime_error("missing closing brace");
  return {static_cast<int>(nodes.size()), edges};
}

template <class T, class D>
void round_trip(const T& x, D decode) {
  const Json j = Json::parse(encode(x).dump());
  CHECK(decode(j) == x);
}

}  // namespace

TEST_CASE("systems and elements") {
  for (const auto& s : {make_system("A", 4), make_system("H", 3), make_system("I", 5)}) {
    const auto back = decode_system(Json::parse(encode(s).dump()));
    CHECK(back.name() == s.name());
    CHECK(back.rank() == s.rank());
  }
  CHECK_THROWS_AS(make_system("B", 3), std::invalid_argument);
  const auto S4 = make_system("A", 4);
  CHECK(parse_element(S4, "w0") == S4.longest());
  CHECK(parse_element(S4, "e") == S4.identity());
  CHECK_THROWS_AS(parse_element(S4, "14"), std::invalid_argument);
  round_trip(S4.longest(), decode_permutation);
  round_trip(Word{1, 2, 3, 2}, decode_word);
  CHECK(decode_word(Json("3123")) == Word{3, 1, 2, 3});
}

TEST_CASE("numbers") {
  round_trip(Rational(-7, 12), decode_rational);
  round_trip(Rational(3), decode_rational);
  CHECK(encode(Rational(1, 3)) == Json("1/3"));
  round_trip(Integer(42), decode_integer);
  const Integer big("123456789012345678901234567890");
  CHECK(encode(big).is_string());
  round_trip(big, decode_integer);
}

TEST_CASE("tableaux, partitions, factorizations, expansions") {
  round_trip(Partition({3, 2, 2}), decode_partition);
  round_trip(parse_tableau("[[1,3],[2]]"), decode_tableau);
  const auto S3 = CoxeterSystem::symmetric(3);
  const auto S4 = CoxeterSystem::symmetric(4);
  const auto g = parse_factorization(S4, "(32)(31)(2)");
  const Json jg = encode(g, S4);
  CHECK(jg.at("text") == "(32)(31)(2)");
  CHECK(jg.at("factors") == Json::parse("[[3,2],[3,1],[2]]"));
  CHECK(format_factorization(decode_factorization(jg)) == "(32)(31)(2)");
  const auto F = schur_expansion(S4, S4.longest());
  round_trip(F, decode_symfunc);
  CHECK(encode(F).at("terms")[0].contains("coeff"));
  const auto M = stanley_monomial(S3, S3.longest()).expansion;
  round_trip(M, decode_symfunc);
}

TEST_CASE("measures, matrices, spectra, EG pairs, reports") {
  const auto S3 = CoxeterSystem::symmetric(3);
  const auto P = ProbabilityMeasure::parse("1/3,2/3");
  const auto back = decode_measure(Json::parse(encode(P).dump()));
  CHECK(back.weights() == P.weights());
  const auto T = build_chain(S3, P);
  const auto T2 = decode_transition_matrix(Json::parse(encode(T).dump()));
  CHECK(T2.states == T.states);
  CHECK(T2.entries == T.entries);
  const auto sp = spectrum(S3, P);
  const auto sp2 = decode_spectrum(Json::parse(encode(sp).dump()));
  REQUIRE(sp2.size() == sp.size());
  for (std::size_t k = 0; k < sp.size(); ++k) {
    CHECK(sp2[k].subset == sp[k].subset);
    CHECK(sp2[k].eigenvalue == sp[k].eigenvalue);
    CHECK(sp2[k].multiplicity == sp[k].multiplicity);
  }
  const auto eg = eg_insert_word({3, 1, 2, 3});
  const auto eg2 = decode_eg_pair(Json::parse(encode(eg).dump()));
  CHECK(eg2.P == eg.P);
  CHECK(eg2.Q == eg.Q);
  VerificationReport r{"demo", false, 3, {"x"}};
  const Json jr = encode(r);
  CHECK(jr.at("passed") == false);
  CHECK(jr.at("violations").size() == 1);
  CHECK_THROWS(decode_transition_matrix(Json::parse(R"({"states":[[1]],"entries":[["1","0"]]})")));
  CHECK_THROWS(decode_measure(Json::parse(R"(["1/2","1/3"])")));
}

TEST_CASE("DOT output parses") {
  const auto S3 = CoxeterSystem::symmetric(3);
  const auto S4 = CoxeterSystem::symmetric(4);
  const auto crystal = build_crystal(S3, S3.longest(), 3);
  const auto [cn, ce] = parse_dot(to_dot<DecreasingFactorization>(crystal, format_factorization));
  CHECK(cn == 8);
  CHECK(ce == 8);

  const CrystalOp<Tableau> e = tableau_crystal_e, f = tableau_crystal_f;
  const auto tab = make_crystal_graph(generate_ssyt(Partition({2, 1}), 3), 2, e, f);
  const auto [tn, te] = parse_dot(to_dot<Tableau>(tab, format_tableau, "tableaux"));
  CHECK(tn == 8);
  CHECK(te == 8);

  const auto ck = ck_graph(S4, S4.longest());
  const auto [kn, ke] = parse_dot(to_dot(ck));
  CHECK(kn == 16);
  CHECK(ke == static_cast<int>(ck.edges.size()));

  const auto [wn, we] = parse_dot(transition_dot(S3));
  CHECK(wn == 2);
  CHECK(we == 4);
  const auto [mn, me] = parse_dot(to_dot(build_chain(S3, ProbabilityMeasure::uniform(2))));
  CHECK(mn == 2);
  CHECK(me == 4);

  CHECK(dot_quote("a\"b") == "\"a\\\"b\"");
  CHECK_THROWS(parse_dot("graph g {\n}\n"));
  CHECK_THROWS(parse_dot("digraph g {\n  n0 -> n1 [label=\"1\"];\n}\n"));
}
