#include "oracles.hpp"

#include "redword/linalg.hpp"
#include "redword/markov.hpp"
#include "redword/verify.hpp"

#include <doctest.h>

using namespace redword;

namespace {

const auto S3 = CoxeterSystem::symmetric(3);
const auto S4 = CoxeterSystem::symmetric(4);

Rational q(long a, long b = 1) { return Rational(a, b); }

std::vector<ProbabilityMeasure> measures(int k) {
  std::vector<ProbabilityMeasure> out{ProbabilityMeasure::uniform(k)};
  for (std::uint64_t seed = 11; seed <= 13; ++seed) out.push_back(random_measure(k, seed));
  return out;
}

}  // namespace

TEST_CASE("probability measures") {
  const auto P = ProbabilityMeasure::parse("1/2,1/3,1/6");
  CHECK(P.size() == 3);
  CHECK(P(2) == q(1, 3));
  CHECK(P.mass({1, 3}) == q(2, 3));
  CHECK(P.has_full_support());
  CHECK_FALSE(ProbabilityMeasure::parse("1/2,1/2,0").has_full_support());
  CHECK_THROWS_AS(ProbabilityMeasure::parse("0.5,0.5"), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityMeasure::parse("1/2,1/3"), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityMeasure::parse("3/2,-1/2"), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto R = random_measure(4, seed);
    CHECK(R.has_full_support());
    CHECK(R.mass({1, 2, 3, 4}) == 1);
  }
  CHECK(to_string(P) == "1/2,1/3,1/6");
}

TEST_CASE("the exchange chain on Red(w0) for S3") {
  const auto T = build_chain(S3, ProbabilityMeasure::uniform(2));
  REQUIRE(T.states == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  for (const auto& row : T.entries)
    for (const auto& x : row) CHECK(x == q(1, 2));
  const auto edges = transition_edges(S3);
  CHECK(edges.size() == 4);
  const auto P = ProbabilityMeasure::parse("1/3,2/3");
  const auto T2 = build_chain(S3, P);
  CHECK(T2.entries[0][0] == q(1, 3));  // 121 -1-> 121
  CHECK(T2.entries[1][0] == q(2, 3));  // 121 -2-> 212
  CHECK(T2.entries[0][1] == q(1, 3));  // 212 -1-> 121
  CHECK(T2.entries[1][1] == q(2, 3));  // 212 -2-> 212
  CHECK_THROWS(build_chain(S3, ProbabilityMeasure::parse("1,0")));
  CHECK_THROWS(build_chain(S3, ProbabilityMeasure::uniform(3)));
}

TEST_CASE("spectrum of S3 by hand") {
  const auto sp = spectrum(S3, ProbabilityMeasure::uniform(2));
  REQUIRE(sp.size() == 4);
  CHECK(sp[0].subset.empty());
  CHECK(sp[0].multiplicity == 1);
  CHECK(sp[1].multiplicity == 0);
  CHECK(sp[2].multiplicity == 0);
  CHECK(sp[3].multiplicity == 1);
  CHECK(sp[3].eigenvalue == 1);
}

TEST_CASE("characteristic polynomial against a determinant oracle") {
  for (const auto* S : {&S3, &S4}) {
    for (const auto& P : measures(S->rank())) {
      const auto T = build_chain(*S, P);
      const auto cp = characteristic_polynomial(T.entries);
      CHECK(cp.degree() == static_cast<int>(T.size()));
      for (const auto& x : {q(0), q(1), q(2), q(1, 3), q(-5, 7)}) CHECK(cp(x) == oracle::charpoly_at(T.entries, x));
    }
  }
  const RationalMatrix a{{q(2), q(1)}, {q(1), q(2)}};
  CHECK(to_string(characteristic_polynomial(a)) == "x^2 - 4*x + 3");
}

TEST_CASE("exchange chain: stochastic, spectrum, stationary law") {
  for (const auto* S : {&S3, &S4}) {
    for (const auto& P : measures(S->rank())) {
      CAPTURE(S->name());
      CAPTURE(to_string(P));
      const auto T = build_chain(*S, P);
      CHECK(is_column_stochastic(T));
      CHECK(is_strongly_connected(T));
      CHECK(period(T) == 1);
      const auto sp = spectrum(*S, P);
      Integer total = 0;
      for (const auto& t : sp) total += t.multiplicity;
      CHECK(total == Integer(T.size()));
      CHECK(characteristic_polynomial(T.entries) == predicted_characteristic_polynomial(sp));
      const auto pi = stationary_distribution(*S, P);
      Rational sum = 0;
      for (const auto& x : pi) sum += x;
      CHECK(sum == 1);
      CHECK(multiply(T.entries, pi) == pi);
      CHECK(solve_stationary(T.entries) == pi);
    }
  }
}

TEST_CASE("the multiplicity sum with w_J in place of w_K does not match") {
  const auto P = ProbabilityMeasure::uniform(3);
  const auto T = build_chain(S4, P);
  const auto sp = spectrum(S4, P, MultiplicityFormula::AsPrinted);
  bool negative = false;
  for (const auto& t : sp) negative = negative || t.multiplicity < 0;
  if (!negative) CHECK(characteristic_polynomial(T.entries) != predicted_characteristic_polynomial(sp));
  const auto corrected = spectrum(S4, P);
  bool differs = false;
  for (std::size_t k = 0; k < sp.size(); ++k) differs = differs || sp[k].multiplicity != corrected[k].multiplicity;
  CHECK(differs);
}

TEST_CASE("factor_over_roots") {
  const auto p = Polynomial::linear_factor(q(1)) * Polynomial::linear_factor(q(1)) * Polynomial::linear_factor(q(1, 2));
  const auto [mult, rest] = factor_over_roots(p, {q(1), q(1, 2), q(0)});
  CHECK(mult.at(q(1)) == 2);
  CHECK(mult.at(q(1, 2)) == 1);
  CHECK(mult.at(q(0)) == 0);
  CHECK(rest.degree() == 0);
}

TEST_CASE("hypercube and dihedral chains") {
  const auto H2 = CoxeterSystem::hypercube(2);
  const auto P = ProbabilityMeasure::parse("1/3,2/3");
  const auto pi = stationary_distribution(H2, P);
  // Move-to-front: book 1 is on top with probability P(1).
  CHECK(pi == std::vector<Rational>{q(1, 3), q(2, 3)});
  for (int m = 3; m <= 6; ++m) {
    const auto I = CoxeterSystem::dihedral(m);
    const auto T = build_chain(I, P);
    CHECK(characteristic_polynomial(T.entries) == predicted_characteristic_polynomial(spectrum(I, P)));
    CHECK(multiply(T.entries, stationary_distribution(I, P)) == stationary_distribution(I, P));
  }
}

TEST_CASE("simulation") {
  const auto P = ProbabilityMeasure::uniform(2);
  const auto a = simulate(S3, P, 1000, 5);
  const auto b = simulate(S3, P, 1000, 5);
  CHECK(a.visits == b.visits);
  std::uint64_t total = 0;
  for (auto v : a.visits) total += v;
  CHECK(total == 1001);
  const auto sim = simulate(S3, P, 100000, 20240601);
  CHECK(total_variation(sim.frequencies, stationary_distribution(S3, P)) < 0.02);
}

TEST_CASE("posets and promotion") {
  CHECK_THROWS(NaturalPoset(3, {{2, 1}}));
  CHECK_THROWS(NaturalPoset(3, {{1, 4}}));
  const NaturalPoset v(3, {{1, 3}, {2, 3}});
  CHECK(v.linear_extensions() == std::vector<Word>{{1, 2, 3}, {2, 1, 3}});
  CHECK(NaturalPoset::chain(4).linear_extensions().size() == 1);
  CHECK(NaturalPoset::antichain(4).linear_extensions().size() == 24);
  const NaturalPoset c(3, {{1, 2}, {2, 3}});
  CHECK(c.less(1, 3));
  const auto anti = NaturalPoset::antichain(4);
  CHECK(promotion_tau(anti, Word{1, 2, 3, 4}, 2) == Word{1, 3, 2, 4});
  CHECK(promotion_tau(c, Word{1, 2, 3}, 1) == Word{1, 2, 3});
  CHECK(promotion_hat(anti, Word{2, 4, 1, 3}, 1) == Word{1, 2, 4, 3});
  const auto chain = promotion_chain(v, ProbabilityMeasure::parse("1/2,1/3,1/6"));
  CHECK(is_column_stochastic(chain));
}

TEST_CASE("promotion on the antichain equals the Tsetlin library") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& P : measures(n)) {
      const auto a = promotion_chain(NaturalPoset::antichain(n), P);
      const auto b = tsetlin_chain(n, P);
      CHECK(a.states == b.states);
      CHECK(a.entries == b.entries);
    }
  }
}
