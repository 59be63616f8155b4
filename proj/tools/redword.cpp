// redword: command line front end for reduced words, decreasing
// factorization crystals, Edelman-Greene insertion, Stanley symmetric
// functions and the exchange walk on Red(w0).
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error,
// 3 size cap exceeded or internal error.

#include "redword/edelman_greene.hpp"
#include "redword/factorization.hpp"
#include "redword/io.hpp"
#include "redword/linalg.hpp"
#include "redword/markov.hpp"
#include "redword/stanley.hpp"
#include "redword/tableau.hpp"
#include "redword/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace redword;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Characteristic polynomials of chains beyond this size are not computed.
constexpr std::size_t kCharPolyStates = 200;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// REDWORD_MAX_STATES caps group orders and enumerations (default 200000).
std::size_t state_cap() {
  if (const char* env = std::getenv("REDWORD_MAX_STATES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("REDWORD_MAX_STATES is not a number: ") + env);
    }
  }
  return 200000;
}

void require_cap(double size, const std::string& what) {
  if (size > static_cast<double>(state_cap())) {
    std::ostringstream msg;
    msg << what << " has about " << size << " elements, above REDWORD_MAX_STATES = " << state_cap();
    throw CapExceeded(msg.str());
  }
}

double group_order(const std::string& type, int parameter) {
  if (type == "A") {
    double n = 1;
    for (int k = 2; k <= parameter; ++k) n *= k;
    return n;
  }
  if (type == "H") return std::pow(2.0, parameter);
  return 2.0 * parameter;
}

struct SystemOptions {
  std::string type = "A";
  int rank = 0;

  void attach(CLI::App* app, bool required = true) {
    app->add_option("--type", type, "A (symmetric group S_n), H (hypercube (Z/2)^n) or I (dihedral I_2(m))")
        ->check(CLI::IsMember({"A", "H", "I"}));
    auto* opt = app->add_option("--rank", rank, "n for S_n and (Z/2)^n, m for I_2(m)")->check(CLI::Range(1, 64));
    if (required) opt->required();
  }
  CoxeterSystem build() const {
    require_cap(group_order(type, rank), type + " with rank " + std::to_string(rank));
    return make_system(type, rank);
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// -- red-words ---------------------------------------------------------------

struct RedWordsOptions {
  SystemOptions system;
  std::string element = "w0";
  bool count = false;
  bool json = false;
};

int run_red_words(const RedWordsOptions& o) {
  const auto S = o.system.build();
  const auto w = parse_element(S, o.element);
  const auto n = S.count_reduced_words(w);
  if (o.count) {
    if (o.json) {
      Json j{{"element", o.element}, {"permutation", encode(w)}, {"count", n}};
      if (S.kind() == CoxeterKind::Symmetric && w == S.longest()) {
        j["hook_length_count"] = encode(hook_length_count(Partition::staircase(S.parameter())));
      }
      print_json(j);
    } else {
      std::cout << n << "\n";
    }
    return 0;
  }
  require_cap(static_cast<double>(n), "Red(" + o.element + ")");
  const auto words = S.reduced_words(w);
  if (o.json) {
    Json list = Json::array();
    for (const auto& word : words) list.push_back(format_word(word));
    print_json({{"element", o.element}, {"words", list}});
  } else {
    for (const auto& word : words) std::cout << format_word(word) << "\n";
  }
  return 0;
}

// -- stanley -----------------------------------------------------------------

struct StanleyOptions {
  SystemOptions system;
  std::string element = "w0";
  std::string basis = "schur";
  std::string method = "crystal";
  int variables = 0;
  bool json = false;
};

int run_stanley(const StanleyOptions& o) {
  const auto S = o.system.build();
  const auto w = parse_element(S, o.element);
  SymFuncExpansion f;
  if (o.basis == "monomial") {
    f = stanley_monomial(S, w, o.variables).expansion;
  } else if (o.method == "eg") {
    f = schur_expansion_via_eg(S, w);
  } else if (o.method == "linear") {
    f = schur_expansion_via_linear_algebra(S, w, o.variables);
  } else {
    f = schur_expansion(S, w);
  }
  if (o.json) {
    print_json(encode(f));
  } else {
    std::cout << to_string(f) << "\n";
  }
  return 0;
}

// -- crystal -----------------------------------------------------------------

struct CrystalOptions {
  SystemOptions system;
  std::string element = "w0";
  int factors = 0;
  bool dot = false;
  bool json = false;
  bool tuple = false;
  // apply
  std::string factorization;
  std::string op = "f";
  int index = 1;
};

int run_crystal_graph(const CrystalOptions& o) {
  const auto S = o.system.build();
  const auto w = parse_element(S, o.element);
  const int factors = o.factors > 0 ? o.factors : default_factor_count(S, w);
  const auto g = build_crystal(S, w, factors);
  const std::function<std::string(const DecreasingFactorization&)> name = [&o](const DecreasingFactorization& f) {
    return o.tuple ? format_factorization_tuple(f) : format_factorization(f);
  };
  if (o.dot) {
    std::cout << to_dot(g, name);
  } else if (o.json) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(encode(v, S));
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({{"source", e.source}, {"target", e.target}, {"label", e.label}});
    print_json({{"element", o.element},
                {"factors", factors},
                {"vertices", vertices},
                {"edges", edges},
                {"components", g.component_count()},
                {"highest_weight", g.highest_weight}});
  } else {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges, " << g.component_count()
              << " components\n";
    for (const auto& e : g.edges) {
      std::cout << name(g.vertices[e.source]) << " --" << e.label << "--> " << name(g.vertices[e.target]) << "\n";
    }
  }
  return 0;
}

int run_crystal_highest(const CrystalOptions& o) {
  const auto S = o.system.build();
  const auto w = parse_element(S, o.element);
  const auto hws = highest_weights(S, w, o.factors);
  if (o.json) {
    Json list = Json::array();
    for (const auto& hw : hws) list.push_back({{"element", encode(hw.element, S)}, {"weight", hw.weight}});
    print_json(list);
  } else {
    for (const auto& hw : hws) std::cout << format_factorization(hw.element) << "  " << format_partition(Partition(hw.weight)) << "\n";
  }
  return 0;
}

int run_crystal_apply(const CrystalOptions& o) {
  const auto S = o.system.build();
  const auto f = parse_factorization(S, o.factorization);
  if (o.index < 1 || o.index >= f.factor_count()) {
    throw std::invalid_argument("index must lie in 1.." + std::to_string(f.factor_count() - 1));
  }
  const auto p = pairing(f, o.index);
  const auto result = o.op == "e" ? crystal_e(f, o.index) : crystal_f(f, o.index);
  if (o.json) {
    Json pairs = Json::array();
    for (const auto& [b, a] : p.pairs) pairs.push_back({b, a});
    print_json({{"input", encode(f, S)},
                {"operator", o.op + std::to_string(o.index)},
                {"unpaired_left", p.left},
                {"unpaired_right", p.right},
                {"pairs", pairs},
                {"result", result ? encode(*result, S) : Json(nullptr)}});
  } else {
    std::cout << (result ? format_factorization(*result) : "null") << "\n";
  }
  return 0;
}

// -- eg ----------------------------------------------------------------------

struct EgOptions {
  SystemOptions system;
  std::string factorization;
  std::string word;
  std::string element = "w0";
  bool dot = false;
  bool json = false;
};

CoxeterSystem system_for_letters(const SystemOptions& opts, const std::string& text) {
  if (opts.rank > 0) return opts.build();
  int top = 1;
  for (char c : text) {
    if (c >= '1' && c <= '9') top = std::max(top, c - '0');
  }
  return CoxeterSystem::symmetric(top + 1);
}

int run_eg_insert(const EgOptions& o) {
  EGPair pair;
  std::string input;
  if (!o.factorization.empty()) {
    const auto S = system_for_letters(o.system, o.factorization);
    const auto f = parse_factorization(S, o.factorization);
    pair = eg_insert(f);
    input = format_factorization(f);
  } else if (!o.word.empty()) {
    const Word w = parse_word(o.word);
    const auto S = system_for_letters(o.system, o.word);
    if (!S.is_reduced(w)) throw std::invalid_argument(o.word + " is not a reduced word");
    pair = eg_insert_word(w);
    input = format_word(w);
  } else {
    throw std::invalid_argument("eg insert needs --factors or --word");
  }
  const Word reading = p_transpose_reading_word(pair.P);
  if (o.json) {
    Json j = encode(pair);
    j["input"] = input;
    j["transpose_reading_word"] = format_word(reading);
    print_json(j);
  } else {
    std::cout << "P = " << format_tableau(pair.P) << "\n"
              << "Q = " << format_tableau(pair.Q) << "\n"
              << "reading word of P^t = " << format_word(reading) << "\n";
  }
  return 0;
}

int run_eg_ck_graph(const EgOptions& o) {
  const auto S = system_for_letters(o.system, o.element);
  const auto w = parse_element(S, o.element);
  require_cap(static_cast<double>(S.count_reduced_words(w)), "Red(" + o.element + ")");
  const auto g = ck_graph(S, w);
  if (o.dot) {
    std::cout << to_dot(g);
  } else if (o.json) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(format_word(v));
    Json edges = Json::array();
    static const char* kinds[] = {"braid", "bac-bca", "cab-acb"};
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      edges.push_back({{"source", g.edges[k].first}, {"target", g.edges[k].second},
                       {"relation", kinds[static_cast<int>(g.kinds[k])]}});
    }
    print_json({{"vertices", vertices}, {"edges", edges}, {"component", g.component},
                {"components", g.component_count}});
  } else {
    std::size_t index = 0;
    for (const auto& comp : ck_components(S, w)) {
      std::cout << "class " << ++index << ":";
      for (const auto& word : comp) std::cout << " " << format_word(word);
      std::cout << "\n";
    }
  }
  return 0;
}

// -- tableaux ----------------------------------------------------------------

struct TableauxOptions {
  std::string shape;
  int entries = 0;
  bool dot = false;
  bool json = false;
};

int run_tableaux_count(const TableauxOptions& o) {
  const auto lambda = parse_partition(o.shape);
  const auto hooks = hook_length_count(lambda);
  Json j{{"shape", encode(lambda)}, {"standard", encode(hooks)}};
  if (o.entries > 0) j["semistandard"] = generate_ssyt(lambda, o.entries).size(), j["entries"] = o.entries;
  if (o.json) {
    print_json(j);
  } else {
    std::cout << "standard: " << hooks << "\n";
    if (o.entries > 0) std::cout << "semistandard (entries <= " << o.entries << "): " << j["semistandard"] << "\n";
  }
  return 0;
}

int run_tableaux_crystal(const TableauxOptions& o) {
  const auto lambda = parse_partition(o.shape);
  const int n = o.entries > 0 ? o.entries : std::max(1, lambda.length());
  const CrystalOp<Tableau> e = [](const Tableau& t, int i) { return tableau_crystal_e(t, i); };
  const CrystalOp<Tableau> f = [](const Tableau& t, int i) { return tableau_crystal_f(t, i); };
  const auto g = make_crystal_graph(generate_ssyt(lambda, n), n - 1, e, f);
  if (o.dot) {
    std::cout << to_dot<Tableau>(g, [](const Tableau& t) { return format_tableau(t); }, "tableau_crystal");
  } else if (o.json) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(encode(v));
    Json edges = Json::array();
    for (const auto& ed : g.edges) edges.push_back({{"source", ed.source}, {"target", ed.target}, {"label", ed.label}});
    print_json({{"shape", encode(lambda)}, {"entries", n}, {"vertices", vertices}, {"edges", edges}});
  } else {
    for (const auto& ed : g.edges) {
      std::cout << format_tableau(g.vertices[ed.source]) << " --" << ed.label << "--> "
                << format_tableau(g.vertices[ed.target]) << "\n";
    }
  }
  return 0;
}

// -- markov ------------------------------------------------------------------

struct MarkovOptions {
  SystemOptions system;
  std::string probs;
  bool report = false;
  bool dot = false;
  bool as_printed = false;
  std::uint64_t steps = 0;
  std::uint64_t seed = 1;
  std::string poset;
  bool json = false;
};

ProbabilityMeasure measure_for(const std::string& probs, int k) {
  return probs.empty() ? ProbabilityMeasure::uniform(k) : ProbabilityMeasure::parse(probs);
}

int run_markov_exchange(const MarkovOptions& o) {
  const auto S = o.system.build();
  const auto P = measure_for(o.probs, S.rank());
  if (P.size() != S.rank()) {
    throw std::invalid_argument(std::to_string(P.size()) + " probabilities given but " + S.name() + " has " +
                                std::to_string(S.rank()) + " generators (for type A, --rank n selects S_n with n-1 "
                                "generators)");
  }
  require_cap(static_cast<double>(S.count_reduced_words(S.longest())), "Red(w0)");
  if (o.dot) {
    std::cout << transition_dot(S);
    return 0;
  }
  const auto T = build_chain(S, P);
  if (o.steps > 0) {
    const auto sim = simulate(S, P, o.steps, o.seed);
    const auto pi = stationary_distribution(S, P);
    const double tv = total_variation(sim.frequencies, pi);
    if (o.json || o.report) {
      print_json({{"steps", o.steps}, {"seed", o.seed}, {"visits", sim.visits}, {"total_variation", tv}});
    } else {
      std::cout << "total variation to pi after " << o.steps << " steps: " << tv << "\n";
    }
    return 0;
  }
  const auto formula = o.as_printed ? MultiplicityFormula::AsPrinted : MultiplicityFormula::Corrected;
  const auto sp = spectrum(S, P, formula);
  const auto predicted = aggregate_spectrum(sp);
  const auto pi = stationary_distribution(S, P);
  Rational sum = 0;
  for (const auto& x : pi) sum += x;
  const bool fixed = multiply(T.entries, pi) == pi && sum == 1;

  std::optional<std::map<Rational, int>> observed;
  std::optional<bool> match;
  if (T.size() <= kCharPolyStates) {
    const auto cp = characteristic_polynomial(T.entries);
    std::vector<Rational> roots;
    for (const auto& [value, m] : predicted) roots.push_back(value);
    auto [mult, rest] = factor_over_roots(cp, roots);
    observed = mult;
    bool ok = rest.degree() == 0;
    for (const auto& [value, m] : predicted) ok = ok && Integer(mult[value]) == m;
    match = ok;
  }

  if (o.report || o.json) {
    Json states = Json::array();
    for (const auto& s : T.states) states.push_back(format_word(s));
    Json matrix = Json::array();
    for (const auto& row : T.entries) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(encode(x));
      matrix.push_back(r);
    }
    Json eigen = Json::array();
    for (const auto& [value, m] : predicted) {
      eigen.push_back({{"value", encode(value)},
                       {"multiplicity_formula", encode(m)},
                       {"multiplicity_charpoly", observed ? Json((*observed)[value]) : Json(nullptr)}});
    }
    Json stationary = Json::array();
    for (const auto& x : pi) stationary.push_back(encode(x));
    print_json({{"system", encode(S)},
                {"probabilities", encode(P)},
                {"states", states},
                {"matrix", matrix},
                {"eigenvalues", eigen},
                {"subsets", encode(sp)},
                {"stationary", stationary},
                {"checks",
                 {{"stochastic", is_column_stochastic(T)},
                  {"T_pi_eq_pi", fixed},
                  {"charpoly_match", match ? Json(*match) : Json(nullptr)}}}});
  } else {
    std::cout << S.name() << ": " << T.size() << " states\n";
    for (const auto& [value, m] : predicted) std::cout << "eigenvalue " << to_string(value) << " multiplicity " << m << "\n";
    std::cout << "column-stochastic: " << (is_column_stochastic(T) ? "yes" : "no") << "\n"
              << "T pi = pi: " << (fixed ? "yes" : "no") << "\n"
              << "charpoly match: " << (match ? (*match ? "yes" : "no") : "skipped") << "\n";
  }
  const bool ok = is_column_stochastic(T) && fixed && match.value_or(true);
  return ok ? 0 : kExitVerifyFailed;
}

NaturalPoset read_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open poset file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("poset file " + path + ": " + e.what());
  }
  std::vector<std::pair<int, int>> relations;
  for (const auto& r : j.value("relations", Json::array())) {
    if (!r.is_array() || r.size() != 2) throw std::invalid_argument("poset relations are pairs [i, j]");
    relations.emplace_back(r[0].get<int>(), r[1].get<int>());
  }
  return NaturalPoset(j.at("n").get<int>(), std::move(relations));
}

int run_markov_promote(const MarkovOptions& o) {
  const auto poset = read_poset(o.poset);
  const auto P = measure_for(o.probs, poset.size());
  const auto T = promotion_chain(poset, P);
  if (o.dot) {
    std::cout << to_dot(T);
    return 0;
  }
  Json j = encode(T);
  j["probabilities"] = encode(P);
  j["stochastic"] = is_column_stochastic(T);
  if (poset.relations().empty()) {
    const auto tsetlin = tsetlin_chain(poset.size(), P);
    j["equals_tsetlin"] = tsetlin.states == T.states && tsetlin.entries == T.entries;
  }
  if (o.json || o.report) {
    print_json(j);
  } else {
    std::cout << T.size() << " linear extensions\n";
    for (std::size_t from = 0; from < T.size(); ++from) {
      for (std::size_t to = 0; to < T.size(); ++to) {
        if (T.entries[to][from] != 0) {
          std::cout << format_word(T.states[from]) << " -> " << format_word(T.states[to]) << "  "
                    << to_string(T.entries[to][from]) << "\n";
        }
      }
    }
  }
  return 0;
}

// -- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  int max_rank = 4;
  bool json = false;
};

int run_verify(const VerifyOptions& o) {
  require_cap(group_order("A", o.max_rank), "S_" + std::to_string(o.max_rank));
  const auto reports = run_suite(o.suite, o.max_rank);
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    list.push_back(encode(r));
    if (!o.json) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      for (const auto& v : r.violations) std::cout << "  violated: " << v << "\n";
    }
  }
  if (o.json) print_json({{"suite", o.suite}, {"max_rank", o.max_rank}, {"passed", ok}, {"reports", list}});
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, crystals on decreasing factorizations, Edelman-Greene insertion, "
               "Stanley symmetric functions and the exchange walk"};
  app.require_subcommand(1);
  std::function<int()> action;

  RedWordsOptions red;
  auto attach_red_words = [&](CLI::App* cmd) {
    red.system.attach(cmd);
    cmd->add_option("--element", red.element, "w0, e, or a word in the generators");
    cmd->add_flag("--count", red.count, "print only |Red(w)|");
    cmd->add_flag("--json", red.json);
    cmd->callback([&] { action = [&] { return run_red_words(red); }; });
  };
  attach_red_words(app.add_subcommand("red-words", "list the reduced words of an element"));
  auto* coxeter = app.add_subcommand("coxeter", "Coxeter group queries");
  coxeter->require_subcommand(1);
  attach_red_words(coxeter->add_subcommand("red-words", "list the reduced words of an element"));

  StanleyOptions st;
  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function F_w");
  st.system.attach(stanley);
  stanley->add_option("--element", st.element);
  stanley->add_option("--basis", st.basis)->check(CLI::IsMember({"monomial", "schur"}));
  stanley->add_option("--method", st.method, "Schur route: crystal (highest weights), eg, linear")
      ->check(CLI::IsMember({"crystal", "eg", "linear"}));
  stanley->add_option("--variables", st.variables, "number of variables (default l(w))");
  stanley->add_flag("--json", st.json);
  stanley->callback([&] { action = [&] { return run_stanley(st); }; });

  CrystalOptions cr;
  auto* crystal = app.add_subcommand("crystal", "crystal B(w) on decreasing factorizations");
  crystal->require_subcommand(1);
  auto* graph = crystal->add_subcommand("graph", "vertices and f_i edges of B(w)");
  auto* highest = crystal->add_subcommand("highest-weights", "highest weight elements of B(w)");
  auto* apply = crystal->add_subcommand("apply", "apply e_i or f_i to one factorization");
  for (auto* cmd : {graph, highest}) {
    cr.system.attach(cmd);
    cmd->add_option("--element", cr.element);
    cmd->add_option("--factors", cr.factors, "number of factors l (default l(w))")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", cr.json);
  }
  graph->add_flag("--dot", cr.dot);
  graph->add_flag("--tuple", cr.tuple, "label vertices as (s2s1, s2, 1) tuples");
  cr.system.attach(apply);
  apply->add_option("--factorization", cr.factorization, "e.g. \"(32)(31)(2)\"")->required();
  apply->add_option("--op", cr.op)->check(CLI::IsMember({"e", "f"}));
  apply->add_option("--index", cr.index)->required();
  apply->add_flag("--json", cr.json);
  graph->callback([&] { action = [&] { return run_crystal_graph(cr); }; });
  highest->callback([&] { action = [&] { return run_crystal_highest(cr); }; });
  apply->callback([&] { action = [&] { return run_crystal_apply(cr); }; });

  EgOptions eg;
  auto* egcmd = app.add_subcommand("eg", "Edelman-Greene insertion and Coxeter-Knuth classes");
  egcmd->require_subcommand(1);
  auto* insert = egcmd->add_subcommand("insert", "insertion and recording tableaux");
  eg.system.attach(insert, false);
  insert->add_option("--factors", eg.factorization, "decreasing factorization, e.g. \"(1)(2)(32)\"");
  insert->add_option("--word", eg.word, "reduced word, recorded with a standard tableau");
  insert->add_flag("--json", eg.json);
  insert->callback([&] { action = [&] { return run_eg_insert(eg); }; });
  auto* ck = egcmd->add_subcommand("ck-graph", "Coxeter-Knuth graph on Red(w)");
  eg.system.attach(ck, false);
  ck->add_option("--element", eg.element, "w0 (needs --rank) or a word");
  ck->add_flag("--dot", eg.dot);
  ck->add_flag("--json", eg.json);
  ck->callback([&] { action = [&] { return run_eg_ck_graph(eg); }; });

  TableauxOptions tb;
  auto* tableaux = app.add_subcommand("tableaux", "Young tableaux");
  tableaux->require_subcommand(1);
  auto* count = tableaux->add_subcommand("count", "standard (and semistandard) tableaux of a shape");
  auto* tcrystal = tableaux->add_subcommand("crystal", "crystal on semistandard tableaux");
  for (auto* cmd : {count, tcrystal}) {
    cmd->add_option("--shape", tb.shape, "partition, e.g. 3,2,1")->required();
    cmd->add_option("--entries", tb.entries, "largest entry")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", tb.json);
  }
  tcrystal->add_flag("--dot", tb.dot);
  count->callback([&] { action = [&] { return run_tableaux_count(tb); }; });
  tcrystal->callback([&] { action = [&] { return run_tableaux_crystal(tb); }; });

  MarkovOptions mk;
  auto* markov = app.add_subcommand("markov", "exchange walk and promotion chains");
  markov->require_subcommand(1);
  auto* exchange = markov->add_subcommand("exchange", "exchange walk on Red(w0)");
  mk.system.attach(exchange);
  exchange->add_option("--probs", mk.probs, "exact fractions a/b, comma separated (default uniform)");
  exchange->add_flag("--report", mk.report, "JSON report: matrix, spectrum, stationary law, checks");
  exchange->add_flag("--dot", mk.dot, "transition graph with edge labels i");
  exchange->add_flag("--as-printed", mk.as_printed, "use w_J instead of w_K in the multiplicity sum");
  exchange->add_option("--simulate", mk.steps, "run the walk for this many steps");
  exchange->add_option("--seed", mk.seed);
  exchange->add_flag("--json", mk.json);
  exchange->callback([&] { action = [&] { return run_markov_exchange(mk); }; });
  auto* promote = markov->add_subcommand("promote", "promotion chain on linear extensions");
  promote->add_option("--poset", mk.poset, "JSON {\"n\": ..., \"relations\": [[i, j], ...]}")->required();
  promote->add_option("--probs", mk.probs);
  promote->add_flag("--dot", mk.dot);
  promote->add_flag("--json,--report", mk.json);
  promote->callback([&] { action = [&] { return run_markov_promote(mk); }; });

  VerifyOptions vf;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--suite", vf.suite)->check(CLI::IsMember({"all", "coxeter", "crystal", "tableaux", "eg",
                                                                "stanley", "markov"}));
  verify->add_option("--max-rank", vf.max_rank, "check S_2 .. S_n")->check(CLI::Range(2, 6));
  verify->add_flag("--json", vf.json);
  verify->callback([&] { action = [&] { return run_verify(vf); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCap;
  }
}
