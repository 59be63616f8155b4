#pragma once

#include "redword/coxeter.hpp"
#include "redword/linalg.hpp"
#include "redword/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace redword {

/// Probability measure on the generator labels 1..k with exact weights.
class ProbabilityMeasure {
 public:
  /// Throws unless every weight lies in [0,1] and they sum to exactly one.
  explicit ProbabilityMeasure(std::vector<Rational> weights);
  static ProbabilityMeasure uniform(int k);
  /// "1/3,1/3,1/3"; decimals are rejected.
  static ProbabilityMeasure parse(const std::string& text);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& operator()(Letter i) const { return weights_.at(i - 1); }
  const std::vector<Rational>& weights() const { return weights_; }
  std::vector<Letter> support() const;
  bool has_full_support() const { return static_cast<int>(support().size()) == size(); }

  /// lambda_J = sum of P(j) over j in J.
  Rational mass(const std::vector<Letter>& J) const;

 private:
  std::vector<Rational> weights_;
};

std::string to_string(const ProbabilityMeasure& P);  // "1/3,1/3,1/3"

/// Column-stochastic matrix: entries[to][from] is the probability of the
/// move from states[from] to states[to].
struct TransitionMatrix {
  std::vector<Word> states;
  RationalMatrix entries;

  std::size_t size() const { return states.size(); }
  std::size_t index_of(const Word& w) const;
};

/// Exchange walk on Red(w0): from w go to exchange(i, w) with probability P(i).
/// Throws unless P is defined on exactly the generators and has full support.
TransitionMatrix build_chain(const CoxeterSystem& system, const ProbabilityMeasure& P);

/// Labeled edges w --i--> exchange(i, w), self-loops included, in state order.
struct TransitionEdge {
  std::size_t from;
  std::size_t to;
  Letter label;
};
std::vector<TransitionEdge> transition_edges(const CoxeterSystem& system);

enum class MultiplicityFormula {
  Corrected,  // sum over K >= J of (-1)^{|K|-|J|} |Red(w_K w0)|
  AsPrinted   // same sum with w_J in place of w_K
};

struct SpectrumTerm {
  std::vector<Letter> subset;  // J
  Rational eigenvalue;         // lambda_J
  Integer multiplicity;        // m_J
};

/// One term per subset J of the generators, subsets ordered by bitmask.
std::vector<SpectrumTerm> spectrum(const CoxeterSystem& system, const ProbabilityMeasure& P,
                                   MultiplicityFormula formula = MultiplicityFormula::Corrected);

/// Multiplicities summed over subsets with equal eigenvalue.
std::map<Rational, Integer> aggregate_spectrum(const std::vector<SpectrumTerm>& terms);

/// prod over the spectrum of (x - lambda_J)^{m_J}; throws on negative multiplicities.
Polynomial predicted_characteristic_polynomial(const std::vector<SpectrumTerm>& terms);

/// Multiplicity of each root of a polynomial among the candidate roots, by
/// repeated synthetic division. Returns the leftover quotient as well.
std::pair<std::map<Rational, int>, Polynomial> factor_over_roots(Polynomial p, const std::vector<Rational>& roots);

/// Closed-form stationary distribution: for w = i_1 ... i_l,
///   pi(w) = prod_j P(i_j) / (1 - lambda_{D_R(s_{i_1} ... s_{i_{j-1}})}),
/// aligned with the states of build_chain.
std::vector<Rational> stationary_distribution(const CoxeterSystem& system, const ProbabilityMeasure& P);

bool is_column_stochastic(const TransitionMatrix& t);
bool is_strongly_connected(const TransitionMatrix& t);
/// gcd of cycle lengths of the transition graph (1 means aperiodic); assumes strong connectivity.
int period(const TransitionMatrix& t);

struct Simulation {
  std::vector<Word> states;
  std::vector<std::uint64_t> visits;  // occupation counts of X_0, ..., X_steps
  std::vector<double> frequencies;
  std::size_t final_state = 0;
};

/// Runs the walk from the first state for `steps` moves with a seeded
/// Mersenne Twister. The empirical distribution counts X_0 through X_steps.
Simulation simulate(const CoxeterSystem& system, const ProbabilityMeasure& P, std::uint64_t steps, std::uint64_t seed);

double total_variation(const std::vector<double>& empirical, const std::vector<Rational>& exact);

/// Exchange walk on the hypercube group: move-to-front on n books.
TransitionMatrix tsetlin_chain(int n, const ProbabilityMeasure& P);

/// Finite poset on 1..n given by cover or order relations (i, j) meaning i < j.
class NaturalPoset {
 public:
  /// Throws unless every relation (i, j) has 1 <= i < j <= n (natural labeling).
  NaturalPoset(int n, std::vector<std::pair<int, int>> relations);
  static NaturalPoset antichain(int n) { return NaturalPoset(n, {}); }
  static NaturalPoset chain(int n);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }
  bool less(int a, int b) const { return closure_[a - 1][b - 1]; }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

  /// Linear extensions as words pi_1 ... pi_n, sorted.
  std::vector<Word> linear_extensions() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> relations_;
  std::vector<std::vector<bool>> closure_;
};

/// tau_i swaps positions i and i+1 when their labels are incomparable.
Word promotion_tau(const NaturalPoset& poset, const Word& pi, int i);
/// partial_i = tau_1 tau_2 ... tau_{i-1}, tau_{i-1} applied first.
Word promotion_partial(const NaturalPoset& poset, const Word& pi, int i);
/// Promotion from the position of label i.
Word promotion_hat(const NaturalPoset& poset, const Word& pi, int label);

/// Markov chain on linear extensions: pi -> promotion_hat(pi, i) with probability P(i).
TransitionMatrix promotion_chain(const NaturalPoset& poset, const ProbabilityMeasure& P);

}  // namespace redword
