#include "redword/markov.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace redword {

// ---------------------------------------------------------------------------
// ProbabilityMeasure

ProbabilityMeasure::ProbabilityMeasure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("probability measure needs at least one weight");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0 || w > 1) throw std::invalid_argument("probability " + to_string(w) + " outside [0,1]");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("probabilities sum to " + to_string(total) + ", not 1");
}

ProbabilityMeasure ProbabilityMeasure::uniform(int k) {
  return ProbabilityMeasure(std::vector<Rational>(k, Rational(1, k)));
}

ProbabilityMeasure ProbabilityMeasure::parse(const std::string& text) {
  std::vector<Rational> weights;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) weights.push_back(parse_rational(token));
  return ProbabilityMeasure(std::move(weights));
}

std::vector<Letter> ProbabilityMeasure::support() const {
  std::vector<Letter> out;
  for (int i = 1; i <= size(); ++i) {
    if (weights_[i - 1] != 0) out.push_back(i);
  }
  return out;
}

std::string to_string(const ProbabilityMeasure& P) {
  std::string out;
  for (const auto& w : P.weights()) out += (out.empty() ? "" : ",") + to_string(w);
  return out;
}

Rational ProbabilityMeasure::mass(const std::vector<Letter>& J) const {
  Rational total = 0;
  for (Letter j : J) total += (*this)(j);
  return total;
}

// ---------------------------------------------------------------------------
// Exchange chain

std::size_t TransitionMatrix::index_of(const Word& w) const {
  const auto it = std::lower_bound(states.begin(), states.end(), w);
  if (it == states.end() || *it != w) throw std::out_of_range("not a state: " + format_word(w));
  return static_cast<std::size_t>(it - states.begin());
}

namespace {

void require_measure(const CoxeterSystem& system, const ProbabilityMeasure& P) {
  if (P.size() != system.rank()) {
    throw std::invalid_argument("measure has " + std::to_string(P.size()) + " weights but " + system.name() +
                                " has " + std::to_string(system.rank()) + " generators");
  }
  if (!P.has_full_support()) {
    throw std::invalid_argument("the exchange walk needs a measure with support on every generator");
  }
}

std::vector<Letter> subset_of(unsigned mask, int rank) {
  std::vector<Letter> out;
  for (int i = 1; i <= rank; ++i) {
    if (mask & (1u << (i - 1))) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<TransitionEdge> transition_edges(const CoxeterSystem& system) {
  const auto states = system.reduced_words(system.longest());
  std::vector<TransitionEdge> edges;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Letter i : system.generators()) {
      const Word next = system.exchange(i, states[s]);
      const auto t = static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), next) - states.begin());
      edges.push_back({s, t, i});
    }
  }
  return edges;
}

TransitionMatrix build_chain(const CoxeterSystem& system, const ProbabilityMeasure& P) {
  require_measure(system, P);
  TransitionMatrix t;
  t.states = system.reduced_words(system.longest());
  t.entries.assign(t.size(), std::vector<Rational>(t.size(), Rational(0)));
  for (const auto& e : transition_edges(system)) t.entries[e.to][e.from] += P(e.label);
  return t;
}

std::vector<SpectrumTerm> spectrum(const CoxeterSystem& system, const ProbabilityMeasure& P,
                                   MultiplicityFormula formula) {
  require_measure(system, P);
  const int rank = system.rank();
  const unsigned full = (1u << rank) - 1;
  const Permutation& w0 = system.longest();
  std::vector<Integer> red_count(full + 1);
  for (unsigned mask = 0; mask <= full; ++mask) {
    const Permutation wk = system.parabolic_longest(subset_of(mask, rank));
    red_count[mask] = system.count_reduced_words(system.multiply(wk, w0));
  }
  std::vector<SpectrumTerm> out;
  for (unsigned J = 0; J <= full; ++J) {
    Integer m = 0;
    for (unsigned K = 0; K <= full; ++K) {
      if ((K & J) != J) continue;
      const int sign_exponent = std::popcount(K) - std::popcount(J);
      const Integer& term = formula == MultiplicityFormula::Corrected ? red_count[K] : red_count[J];
      m += sign_exponent % 2 == 0 ? term : Integer(-term);
    }
    const auto subset = subset_of(J, rank);
    out.push_back({subset, P.mass(subset), m});
  }
  return out;
}

std::map<Rational, Integer> aggregate_spectrum(const std::vector<SpectrumTerm>& terms) {
  std::map<Rational, Integer> out;
  for (const auto& t : terms) out[t.eigenvalue] += t.multiplicity;
  return out;
}

Polynomial predicted_characteristic_polynomial(const std::vector<SpectrumTerm>& terms) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& t : terms) {
    if (t.multiplicity < 0) {
      throw std::domain_error("negative multiplicity for eigenvalue " + to_string(t.eigenvalue));
    }
    for (Integer k = 0; k < t.multiplicity; ++k) p = p * Polynomial::linear_factor(t.eigenvalue);
  }
  return p;
}

std::pair<std::map<Rational, int>, Polynomial> factor_over_roots(Polynomial p, const std::vector<Rational>& roots) {
  std::map<Rational, int> mult;
  for (const auto& r : roots) {
    if (mult.count(r)) continue;
    mult[r] = 0;
    while (p.degree() >= 1 && p(r) == 0) {
      // synthetic division by (x - r)
      const auto& c = p.coefficients();
      std::vector<Rational> q(c.size() - 1);
      Rational carry = 0;
      for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
      }
      p = Polynomial(std::move(q));
      ++mult[r];
    }
  }
  return {mult, p};
}

std::vector<Rational> stationary_distribution(const CoxeterSystem& system, const ProbabilityMeasure& P) {
  require_measure(system, P);
  const auto states = system.reduced_words(system.longest());
  std::vector<Rational> pi;
  for (const Word& w : states) {
    Rational value = 1;
    Permutation prefix = system.identity();
    for (Letter i : w) {
      const Rational denominator = 1 - P.mass(system.right_descents(prefix));
      if (denominator == 0) {
        throw std::logic_error("vanishing denominator in the stationary product at prefix of " + format_word(w));
      }
      value *= P(i) / denominator;
      prefix = system.multiply(prefix, system.generator(i));
    }
    pi.push_back(value);
  }
  return pi;
}

bool is_column_stochastic(const TransitionMatrix& t) {
  for (std::size_t c = 0; c < t.size(); ++c) {
    Rational total = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (t.entries[r][c] < 0) return false;
      total += t.entries[r][c];
    }
    if (total != 1) return false;
  }
  return true;
}

namespace {

std::vector<int> bfs_distances(const TransitionMatrix& t, bool forward) {
  std::vector<int> dist(t.size(), -1);
  if (t.size() == 0) return dist;
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < t.size(); ++v) {
      const bool edge = forward ? t.entries[v][u] != 0 : t.entries[u][v] != 0;
      if (edge && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_strongly_connected(const TransitionMatrix& t) {
  const auto fwd = bfs_distances(t, true);
  const auto bwd = bfs_distances(t, false);
  return std::none_of(fwd.begin(), fwd.end(), [](int d) { return d < 0; }) &&
         std::none_of(bwd.begin(), bwd.end(), [](int d) { return d < 0; });
}

int period(const TransitionMatrix& t) {
  const auto dist = bfs_distances(t, true);
  int g = 0;
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (dist[u] < 0) continue;
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (t.entries[v][u] != 0 && dist[v] >= 0) g = std::gcd(g, std::abs(dist[u] + 1 - dist[v]));
    }
  }
  return g;
}

Simulation simulate(const CoxeterSystem& system, const ProbabilityMeasure& P, std::uint64_t steps,
                    std::uint64_t seed) {
  require_measure(system, P);
  Simulation sim;
  sim.states = system.reduced_words(system.longest());
  const std::size_t n = sim.states.size();
  const int rank = system.rank();
  std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(rank));
  for (const auto& e : transition_edges(system)) next[e.from][e.label - 1] = e.to;
  std::vector<double> cumulative(rank);
  double acc = 0;
  for (int i = 0; i < rank; ++i) cumulative[i] = acc += to_double(P.weights()[i]);

  std::mt19937_64 rng(seed);
  sim.visits.assign(n, 0);
  std::size_t state = 0;
  ++sim.visits[state];
  for (std::uint64_t step = 0; step < steps; ++step) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    int choice = 0;
    while (choice + 1 < rank && u >= cumulative[choice]) ++choice;
    state = next[state][choice];
    ++sim.visits[state];
  }
  sim.final_state = state;
  for (auto v : sim.visits) sim.frequencies.push_back(static_cast<double>(v) / static_cast<double>(steps + 1));
  return sim;
}

double total_variation(const std::vector<double>& empirical, const std::vector<Rational>& exact) {
  if (empirical.size() != exact.size()) throw std::invalid_argument("distribution sizes differ");
  double total = 0;
  for (std::size_t k = 0; k < exact.size(); ++k) total += std::abs(empirical[k] - to_double(exact[k]));
  return total / 2;
}

TransitionMatrix tsetlin_chain(int n, const ProbabilityMeasure& P) {
  return build_chain(CoxeterSystem::hypercube(n), P);
}

// ---------------------------------------------------------------------------
// Posets and promotion

NaturalPoset::NaturalPoset(int n, std::vector<std::pair<int, int>> relations)
    : n_(n), relations_(std::move(relations)) {
  if (n < 1) throw std::invalid_argument("poset needs at least one element");
  closure_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : relations_) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("poset relation outside 1..n");
    if (a >= b) {
      throw std::invalid_argument("labeling is not natural: relation " + std::to_string(a) + " < " +
                                  std::to_string(b) + " needs the smaller label below");
    }
    closure_[a - 1][b - 1] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!closure_[a][k]) continue;
      for (int b = 0; b < n; ++b) {
        if (closure_[k][b]) closure_[a][b] = true;
      }
    }
  }
}

NaturalPoset NaturalPoset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
  return NaturalPoset(n, std::move(rel));
}

std::vector<Word> NaturalPoset::linear_extensions() const {
  std::vector<Word> out;
  Word current;
  std::vector<bool> used(n_, false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n_) {
      out.push_back(current);
      return;
    }
    for (int x = 1; x <= n_; ++x) {
      if (used[x - 1]) continue;
      bool minimal = true;
      for (int y = 1; y <= n_ && minimal; ++y) {
        if (!used[y - 1] && y != x && less(y, x)) minimal = false;
      }
      if (!minimal) continue;
      used[x - 1] = true;
      current.push_back(x);
      self(self);
      current.pop_back();
      used[x - 1] = false;
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

Word promotion_tau(const NaturalPoset& poset, const Word& pi, int i) {
  Word out = pi;
  if (!poset.comparable(pi[i - 1], pi[i])) std::swap(out[i - 1], out[i]);
  return out;
}

Word promotion_partial(const NaturalPoset& poset, const Word& pi, int i) {
  Word out = pi;
  for (int j = i - 1; j >= 1; --j) out = promotion_tau(poset, out, j);
  return out;
}

Word promotion_hat(const NaturalPoset& poset, const Word& pi, int label) {
  const auto pos = std::find(pi.begin(), pi.end(), label);
  if (pos == pi.end()) throw std::invalid_argument("label " + std::to_string(label) + " not in extension");
  return promotion_partial(poset, pi, static_cast<int>(pos - pi.begin()) + 1);
}

TransitionMatrix promotion_chain(const NaturalPoset& poset, const ProbabilityMeasure& P) {
  if (P.size() != poset.size()) {
    throw std::invalid_argument("measure needs one weight per poset element");
  }
  TransitionMatrix t;
  t.states = poset.linear_extensions();
  t.entries.assign(t.size(), std::vector<Rational>(t.size(), Rational(0)));
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (int i = 1; i <= poset.size(); ++i) {
      if (P(i) == 0) continue;
      t.entries[t.index_of(promotion_hat(poset, t.states[s], i))][s] += P(i);
    }
  }
  return t;
}

}  // namespace redword
