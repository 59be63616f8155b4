#include "redword/verify.hpp"

#include "redword/factorization.hpp"
#include "redword/linalg.hpp"
#include "redword/stanley.hpp"
#include "redword/tableau.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace redword {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coxeter", "crystal", "tableaux", "eg", "stanley", "markov"};
  return names;
}

void absorb(VerificationReport& total, const VerificationReport& part) {
  total.cases += part.cases;
  for (const auto& v : part.violations) total.fail(v);
  if (!part.passed && part.violations.empty()) total.fail(part.name + " failed");
}

std::vector<Permutation> random_elements(const CoxeterSystem& system, int count, std::uint64_t seed) {
  const auto all = system.elements();
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  for (int k = 0; k < count; ++k) out.push_back(all[rng() % all.size()]);
  return out;
}

ProbabilityMeasure random_measure(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Integer> raw;
  Integer total = 0;
  for (int i = 0; i < k; ++i) {
    raw.emplace_back(1 + static_cast<int>(rng() % 9));
    total += raw.back();
  }
  std::vector<Rational> weights;
  for (const auto& r : raw) weights.emplace_back(r, total);
  return ProbabilityMeasure(std::move(weights));
}

namespace {

std::vector<CoxeterSystem> symmetric_groups(int max_n) {
  std::vector<CoxeterSystem> out;
  for (int n = 2; n <= max_n; ++n) out.push_back(CoxeterSystem::symmetric(n));
  return out;
}

// -- coxeter ----------------------------------------------------------------

std::vector<VerificationReport> coxeter_suite(int max_n) {
  VerificationReport words{"reduced words are reduced, distinct and evaluate to w"};
  VerificationReport recursion{"|Red(w)| = sum over right descents i of |Red(w s_i)|"};
  VerificationReport staircase{"|Red(w0)| = number of standard tableaux of staircase shape"};
  VerificationReport exchange{"exchange(i, w) is a reduced word of w0 starting with i"};
  for (const auto& S : symmetric_groups(max_n)) {
    for (const auto& w : S.elements()) {
      const auto red = S.reduced_words(w);
      ++words.cases;
      if (!std::is_sorted(red.begin(), red.end()) || std::adjacent_find(red.begin(), red.end()) != red.end()) {
        words.fail(S.describe(w) + ": reduced words not sorted and distinct");
      }
      for (const auto& r : red) {
        if (static_cast<int>(r.size()) != S.length(w) || S.evaluate(r) != w) {
          words.fail(S.describe(w) + ": " + format_word(r) + " is not a reduced word");
        }
      }
      if (S.length(w) != w.inversions()) words.fail(S.describe(w) + ": length differs from inversion count");
      ++recursion.cases;
      if (!w.is_identity()) {
        std::size_t sum = 0;
        for (Letter i : S.right_descents(w)) sum += S.count_reduced_words(S.multiply(w, S.generator(i)));
        if (sum != red.size()) recursion.fail(S.describe(w) + ": recursion gives " + std::to_string(sum));
      }
    }
    const auto red0 = S.reduced_words(S.longest());
    ++staircase.cases;
    if (Integer(red0.size()) != hook_length_count(Partition::staircase(S.parameter()))) {
      staircase.fail(S.name() + ": " + std::to_string(red0.size()) + " words");
    }
    for (const auto& r : red0) {
      for (Letter i : S.generators()) {
        ++exchange.cases;
        const Word x = S.exchange(i, r);
        if (x.empty() || x.front() != i || !std::binary_search(red0.begin(), red0.end(), x)) {
          exchange.fail(S.name() + ": exchange(" + std::to_string(i) + ", " + format_word(r) + ") = " + format_word(x));
        }
      }
    }
  }
  return {words, recursion, staircase, exchange};
}

// Crystals are built with min(l(w), kFactorCap) factors. The axioms and the
// intertwining hold for any number of factors; checks that need every reduced
// word as a vertex run only when l(w) <= kFactorCap. All of S_4 is exhaustive.
constexpr int kFactorCap = 6;

int capped_factors(const CoxeterSystem& S, const Permutation& w) {
  return std::min(default_factor_count(S, w), kFactorCap);
}

// -- crystal ----------------------------------------------------------------

std::vector<VerificationReport> crystal_suite(int max_n) {
  VerificationReport axioms{"B(w) satisfies the crystal axioms"};
  VerificationReport stembridge{"B(w) satisfies the Stembridge axioms"};
  VerificationReport highest{"each component of B(w) has one highest weight, of partition weight"};
  VerificationReport character{"character of B(w) is the monomial expansion of F_w"};
  const auto e = factorization_e_op();
  const auto f = factorization_f_op();
  const std::function<std::vector<int>(const DecreasingFactorization&)> weight = [](const auto& b) { return b.weight(); };
  const std::function<std::string(const DecreasingFactorization&)> show = [](const auto& b) {
    return format_factorization(b);
  };
  for (const auto& S : symmetric_groups(max_n)) {
    for (const auto& w : S.elements()) {
      const int l = capped_factors(S, w);
      const auto g = build_crystal(S, w, l);
      const int rank = l - 1;
      ++axioms.cases;
      for (const auto& v : check_crystal_axioms(g.vertices, rank, e, f, weight, show)) axioms.fail(S.describe(w) + ": " + v);
      ++stembridge.cases;
      for (const auto& v : check_stembridge_axioms(g.vertices, rank, e, f, show)) stembridge.fail(S.describe(w) + ": " + v);
      ++highest.cases;
      std::vector<int> per_component(g.component_count(), 0);
      for (auto h : g.highest_weight) {
        ++per_component[g.component[h]];
        if (!is_partition_shaped(g.vertices[h].weight())) highest.fail(S.describe(w) + ": highest weight not a partition");
      }
      if (std::any_of(per_component.begin(), per_component.end(), [](int c) { return c != 1; })) {
        highest.fail(S.describe(w) + ": a component without a unique highest weight");
      }
      ++character.cases;
      std::map<std::vector<int>, Integer> counts;
      for (const auto& b : g.vertices) {
        auto wt = b.weight();
        if (is_partition_shaped(wt)) counts[Partition(wt).parts()] += 1;
      }
      const auto mono = stanley_monomial(S, w, l).expansion;
      for (const auto& [p, c] : mono.terms()) {
        if (counts[p.parts()] != c) character.fail(S.describe(w) + ": count mismatch at " + format_partition(p));
      }
    }
  }
  return {axioms, stembridge, highest, character};
}

// -- tableaux ---------------------------------------------------------------

std::vector<VerificationReport> tableaux_suite(int max_n) {
  VerificationReport axioms{"B(lambda) satisfies the crystal and Stembridge axioms"};
  VerificationReport connected{"B(lambda) is connected with Yamanouchi highest weight"};
  VerificationReport kostka{"SSYT content counts equal Kostka numbers"};
  VerificationReport hooks{"standard tableaux count equals the hook-length formula"};
  const CrystalOp<Tableau> e = [](const Tableau& t, int i) { return tableau_crystal_e(t, i); };
  const CrystalOp<Tableau> f = [](const Tableau& t, int i) { return tableau_crystal_f(t, i); };
  const std::function<std::string(const Tableau&)> show = [](const Tableau& t) { return format_tableau(t); };
  for (int n = 2; n <= max_n; ++n) {
    const std::function<std::vector<int>(const Tableau&)> weight = [n](const Tableau& t) { return tableau_weight(t, n); };
    for (int k = 1; k <= n; ++k) {
      for (const auto& lambda : partitions_of(k, n)) {
        const auto ssyt = generate_ssyt(lambda, n);
        ++axioms.cases;
        for (const auto& v : check_crystal_axioms(ssyt, n - 1, e, f, weight, show)) axioms.fail(v);
        for (const auto& v : check_stembridge_axioms(ssyt, n - 1, e, f, show)) axioms.fail(v);
        ++connected.cases;
        const auto g = make_crystal_graph(ssyt, n - 1, e, f);
        if (g.component_count() != 1 || g.highest_weight.size() != 1 ||
            g.vertices[g.highest_weight.front()] != yamanouchi_tableau(lambda)) {
          connected.fail(format_partition(lambda) + " with entries <= " + std::to_string(n));
        }
        for (const auto& mu : partitions_of(k, n)) {
          ++kostka.cases;
          Integer count = 0;
          std::vector<int> target(n, 0);
          for (int r = 0; r < mu.length(); ++r) target[r] = mu[r];
          for (const auto& t : ssyt) count += tableau_weight(t, n) == target ? 1 : 0;
          if (count != kostka_number(lambda, mu)) {
            kostka.fail("K(" + format_partition(lambda) + ", " + format_partition(mu) + ")");
          }
        }
        ++hooks.cases;
        if (Integer(standard_tableaux(lambda).size()) != hook_length_count(lambda)) {
          hooks.fail(format_partition(lambda));
        }
      }
    }
  }
  return {axioms, connected, kostka, hooks};
}

// -- eg ---------------------------------------------------------------------

std::vector<VerificationReport> eg_suite(int max_n) {
  VerificationReport iff{"equal P tableau <=> Coxeter-Knuth equivalent"};
  VerificationReport intertwine{"Q-tableau map intertwines the crystal operators"};
  VerificationReport components{"crystal components = Coxeter-Knuth classes"};
  VerificationReport moves{"Coxeter-Knuth moves are f_i f_{i+1} e_i e_{i+1}"};
  VerificationReport reading{"highest weights read off reduced words of w from P transpose"};
  for (const auto& S : symmetric_groups(max_n)) {
    for (const auto& w : S.elements()) {
      absorb(iff, same_p_tableau_iff_ck_equivalent(S, w));
      absorb(intertwine, intertwining_check(S, w, capped_factors(S, w)));
      if (S.length(w) <= kFactorCap) {
        absorb(components, ck_crystal_components_check(S, w));
        absorb(moves, ck_edge_crystal_check(S, w));
      }
      for (const auto& hw : highest_weights(S, w)) {
        ++reading.cases;
        const Word r = p_transpose_reading_word(eg_insert(hw.element).P);
        if (static_cast<int>(r.size()) != S.length(w) || S.evaluate(r) != w) {
          reading.fail(format_factorization(hw.element) + " reads " + format_word(r));
        }
      }
    }
  }
  return {iff, intertwine, components, moves, reading};
}

// -- stanley ----------------------------------------------------------------

std::vector<VerificationReport> stanley_suite(int max_n) {
  VerificationReport square_free{"square-free coefficient equals |Red(w)|"};
  VerificationReport three_way{"three-way Schur expansion agreement"};
  VerificationReport interval{"extremal Schur coefficients are one"};
  VerificationReport skew{"s_1^perp F_w = sum of F_v over covers"};
  VerificationReport omega_conj{"omega(F_w) = F_{w0 w w0}"};
  VerificationReport omega_inv{"omega(F_w) = F_{w^-1}"};
  for (const auto& S : symmetric_groups(max_n)) {
    for (const auto& w : S.elements()) {
      absorb(square_free, square_free_check(S, w));
      absorb(three_way, three_way_schur_check(S, w));
      absorb(omega_conj, omega_duality_check(S, w, OmegaPartner::Conjugate));
      absorb(omega_inv, omega_duality_check(S, w, OmegaPartner::Inverse));
      if (w.is_identity()) continue;
      absorb(interval, support_interval_check(S, w));
      absorb(skew, skew_by_s1_check(S, w));
    }
  }
  return {square_free, three_way, interval, skew, omega_conj, omega_inv};
}

// -- markov -----------------------------------------------------------------

// Characteristic polynomials are computed exactly only up to this many states.
constexpr std::size_t kCharPolyLimit = 200;

std::vector<VerificationReport> markov_suite(int max_n) {
  VerificationReport stochastic{"exchange chain is column-stochastic, irreducible and aperiodic"};
  VerificationReport charpoly{"characteristic polynomial = prod (x - lambda_J)^{m_J}"};
  VerificationReport multiplicities{"sum of m_J = |Red(w0)|, all m_J >= 0"};
  VerificationReport stationary{"closed-form pi is stationary and sums to one"};
  VerificationReport tsetlin{"promotion on an antichain = Tsetlin chain"};
  std::vector<CoxeterSystem> systems = symmetric_groups(max_n);
  for (int n = 1; n <= std::min(max_n, 4); ++n) systems.push_back(CoxeterSystem::hypercube(n));
  for (int m = 3; m <= 6; ++m) systems.push_back(CoxeterSystem::dihedral(m));
  for (const auto& S : systems) {
    std::vector<ProbabilityMeasure> measures{ProbabilityMeasure::uniform(S.rank())};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) measures.push_back(random_measure(S.rank(), seed));
    for (const auto& P : measures) {
      const auto T = build_chain(S, P);
      ++stochastic.cases;
      if (!is_column_stochastic(T) || !is_strongly_connected(T) || period(T) != 1) {
        stochastic.fail(S.name() + " P = " + to_string(P));
      }
      const auto sp = spectrum(S, P);
      ++multiplicities.cases;
      Integer total = 0;
      for (const auto& term : sp) {
        total += term.multiplicity;
        if (term.multiplicity < 0) multiplicities.fail(S.name() + ": negative multiplicity");
      }
      if (total != Integer(T.size())) multiplicities.fail(S.name() + ": multiplicities sum to " + to_string(total));
      if (T.size() <= kCharPolyLimit) {
        ++charpoly.cases;
        if (characteristic_polynomial(T.entries) != predicted_characteristic_polynomial(sp)) {
          charpoly.fail(S.name() + " P = " + to_string(P));
        }
      }
      ++stationary.cases;
      const auto pi = stationary_distribution(S, P);
      Rational sum = 0;
      for (const auto& x : pi) sum += x;
      if (sum != 1 || multiply(T.entries, pi) != pi) stationary.fail(S.name() + " P = " + to_string(P));
    }
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for (std::uint64_t seed = 0; seed <= 3; ++seed) {
      const auto P = seed == 0 ? ProbabilityMeasure::uniform(n) : random_measure(n, seed);
      ++tsetlin.cases;
      const auto a = promotion_chain(NaturalPoset::antichain(n), P);
      const auto b = tsetlin_chain(n, P);
      if (a.states != b.states || a.entries != b.entries) tsetlin.fail("n = " + std::to_string(n));
    }
  }
  return {stochastic, charpoly, multiplicities, stationary, tsetlin};
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& suite, int max_n) {
  if (max_n < 2) throw std::invalid_argument("max rank must be at least 2");
  std::vector<VerificationReport> out;
  auto add = [&](std::vector<VerificationReport> part) { out.insert(out.end(), part.begin(), part.end()); };
  const bool all = suite == "all";
  bool matched = all;
  if (all || suite == "coxeter") add(coxeter_suite(max_n)), matched = true;
  if (all || suite == "crystal") add(crystal_suite(max_n)), matched = true;
  if (all || suite == "tableaux") add(tableaux_suite(max_n)), matched = true;
  if (all || suite == "eg") add(eg_suite(max_n)), matched = true;
  if (all || suite == "stanley") add(stanley_suite(max_n)), matched = true;
  if (all || suite == "markov") add(markov_suite(max_n)), matched = true;
  if (!matched) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace redword
