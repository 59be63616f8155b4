#include "oracles.hpp"

#include "redword/factorization.hpp"
#include "redword/partition.hpp"

#include <doctest.h>

#include <set>

using namespace redword;

namespace {

const auto S3 = CoxeterSystem::symmetric(3);
const auto S4 = CoxeterSystem::symmetric(4);

DecreasingFactorization fac(const CoxeterSystem& S, const std::string& text) { return parse_factorization(S, text); }

}  // namespace

TEST_CASE("parsing and formatting factorizations") {
  const auto f = fac(S4, "(32)(31)(2)");
  CHECK(f.factor_count() == 3);
  CHECK(f.factor(1) == Word{2});
  CHECK(f.factor(3) == Word{3, 2});
  CHECK(f.weight() == std::vector<int>{1, 2, 2});
  CHECK(f.word() == Word{3, 2, 3, 1, 2});
  CHECK(format_factorization(f) == "(32)(31)(2)");
  CHECK(fac(S4, "(s3s2)(s3s1)(s2)") == f);
  const auto g = fac(S3, "(1, s1, s2s1)");
  CHECK(format_factorization(g) == "()(1)(21)");
  CHECK(format_factorization_tuple(g) == "(1, s1, s2s1)");
  CHECK(fac(S3, "()(1)(21)") == g);
  CHECK(fac(S3, "(12)") == fac(S3, "(21)"));  // a factor is a set of letters
  CHECK_THROWS(fac(S3, "(1)(1)"));        // not reduced
  CHECK_THROWS(fac(S3, "(3)"));           // not a generator
}

TEST_CASE("pairing examples") {
  const auto p = pairing(fac(S4, "(32)(31)(2)"), 2);
  CHECK(p.left == std::vector<Letter>{3});
  // The letter 1 of w^2 has no partner; f_2 is defined on this element.
  CHECK(p.right == std::vector<Letter>{1});
  CHECK(p.pairs == std::vector<std::pair<Letter, Letter>>{{2, 3}});
  // One empty factor: every letter of the other is unpaired.
  const auto q = pairing(DecreasingFactorization(S4, {{2}, {}}), 1);
  CHECK(q.left.empty());
  CHECK(q.right == std::vector<Letter>{2});
  // (2)(32): the 2 on the left pairs with 3, never with the equal letter 2.
  const auto r = pairing(DecreasingFactorization::from_display(S4, {{2}, {3, 2}}), 1);
  CHECK(r.left.empty());
  CHECK(r.right == std::vector<Letter>{2});
  CHECK(r.pairs == std::vector<std::pair<Letter, Letter>>{{2, 3}});
}

TEST_CASE("worked example: e_2 and f_2 on (s3s2)(s3s1)(s2)") {
  const auto f = fac(S4, "(32)(31)(2)");
  const auto e = crystal_e(f, 2);
  REQUIRE(e);
  CHECK(format_factorization(*e) == "(2)(321)(2)");
  const auto g = crystal_f(f, 2);
  REQUIRE(g);
  CHECK(format_factorization(*g) == "(321)(3)(2)");
  CHECK(crystal_epsilon(f, 2) == 1);
  CHECK(crystal_f(*e, 2) == f);
  CHECK(crystal_e(*g, 2) == f);
  CHECK(e->target() == f.target());
}

TEST_CASE("e applied until the string ends") {
  const auto b = fac(S3, "(21)(2)");
  const auto once = crystal_e(b, 1);
  REQUIRE(once);
  CHECK(format_factorization(*once) == "(1)(21)");
  CHECK_FALSE(crystal_e(*once, 1));
}

TEST_CASE("epsilon and phi") {
  const auto b = fac(S3, "(2)(1)(2)");
  for (int i = 1; i <= 2; ++i) CHECK(crystal_phi(b, i) - crystal_epsilon(b, i) == 0);
  const auto top = fac(S3, "(1, s1, s2s1)");
  CHECK(is_highest_weight(top));
  CHECK(crystal_f(top, 1) == fac(S3, "(1, s2s1, s2)"));
}

TEST_CASE("enumeration against brute-force block splitting") {
  for (int n = 2; n <= 4; ++n) {
    const auto S = CoxeterSystem::symmetric(n);
    for (const auto& w : S.elements()) {
      for (int l = 1; l <= 4; ++l) {
        std::set<std::vector<Word>> got;
        for (const auto& f : decreasing_factorizations(S, w, l)) {
          std::vector<Word> display;
          for (int k = l; k >= 1; --k) display.push_back(f.factor(k));
          got.insert(display);
        }
        CHECK(got == oracle::factorizations_brute(w.one_line(), l));
      }
    }
  }
}

TEST_CASE("weight filter") {
  const auto all = decreasing_factorizations(S4, S4.longest(), 3);
  const auto some = decreasing_factorizations(S4, S4.longest(), 3, std::vector<int>{3, 2, 1});
  std::size_t expected = 0;
  for (const auto& f : all) expected += f.weight() == std::vector<int>{3, 2, 1};
  CHECK(some.size() == expected);
  CHECK(expected == 1);
}

TEST_CASE("B(w0) for S3 with three factors") {
  const auto g = build_crystal(S3, S3.longest(), 3);
  REQUIRE(g.vertices.size() == 8);
  REQUIRE(g.edges.size() == 8);
  const std::vector<std::tuple<std::string, int, std::string>> expected{
      {"(1, s1, s2s1)", 1, "(1, s2s1, s2)"}, {"(s1, 1, s2s1)", 1, "(s1, s2, s1)"},
      {"(s2, s1, s2)", 2, "(s2s1, 1, s2)"},  {"(s2s1, 1, s2)", 1, "(s2s1, s2, 1)"},
      {"(1, s2s1, s2)", 2, "(s2, s1, s2)"},  {"(s1, s2s1, 1)", 2, "(s2s1, s2, 1)"},
      {"(1, s1, s2s1)", 2, "(s1, 1, s2s1)"}, {"(s1, s2, s1)", 1, "(s1, s2s1, 1)"}};
  std::set<std::tuple<std::string, int, std::string>> got;
  for (const auto& e : g.edges) {
    got.insert({format_factorization_tuple(g.vertices[e.source]), e.label,
                format_factorization_tuple(g.vertices[e.target])});
  }
  CHECK(got == std::set<std::tuple<std::string, int, std::string>>(expected.begin(), expected.end()));
  REQUIRE(g.highest_weight.size() == 1);
  CHECK(format_factorization_tuple(g.vertices[g.highest_weight.front()]) == "(1, s1, s2s1)");
  const auto hw = highest_weights(S3, S3.longest());
  REQUIRE(hw.size() == 1);
  CHECK(hw.front().weight == std::vector<int>{2, 1, 0});
}

TEST_CASE("one factor: at most one vertex, no edges") {
  for (const auto& w : S3.elements()) {
    const auto g = build_crystal(S3, w, 1);
    // Only elements with a decreasing reduced word have a one-factor factorization.
    CHECK(g.vertices.size() == oracle::factorizations_brute(w.one_line(), 1).size());
    CHECK(g.vertices.size() <= 1);
    CHECK(g.edges.empty());
  }
  CHECK(build_crystal(S3, S3.longest(), 1).vertices.empty());
}

TEST_CASE("highest weights of s1 s2 s3 s2") {
  const auto w = S4.evaluate(Word{1, 2, 3, 2});
  const auto hw = highest_weights(S4, w, 4);
  const auto target = DecreasingFactorization::from_display(S4, {{}, {1}, {2}, {3, 2}});
  bool found = false;
  for (const auto& h : hw) {
    if (h.element == target) {
      found = true;
      CHECK(h.weight == std::vector<int>{2, 1, 1, 0});
    }
  }
  CHECK(found);
  // Completeness: exactly the factorizations killed by every e_i with partition weight.
  std::size_t killed = 0;
  for (const auto& f : decreasing_factorizations(S4, w, 4)) killed += is_highest_weight(f) && is_partition_shaped(f.weight());
  CHECK(hw.size() == killed);
  const auto s1 = highest_weights(S4, S4.generator(1));
  REQUIRE(s1.size() == 1);
  CHECK(s1.front().weight == std::vector<int>{1});
}

TEST_CASE("crystal axioms on B(w) for every w in S4 with l = l(w)") {
  const auto e = factorization_e_op();
  const auto f = factorization_f_op();
  const std::function<std::vector<int>(const DecreasingFactorization&)> wt = [](const auto& b) { return b.weight(); };
  const std::function<std::string(const DecreasingFactorization&)> show = [](const auto& b) {
    return format_factorization(b);
  };
  for (const auto& w : S4.elements()) {
    const int l = default_factor_count(S4, w);
    const auto g = build_crystal(S4, w, l);
    CHECK(check_crystal_axioms(g.vertices, l - 1, e, f, wt, show).empty());
    for (const auto& v : g.vertices) {
      CHECK(v.target() == w);
      int total = 0;
      for (int x : v.weight()) total += x;
      CHECK(total == S4.length(w));
    }
    for (auto h : g.highest_weight) CHECK(is_partition_shaped(g.vertices[h].weight()));
  }
  const auto g0 = build_crystal(S4, S4.longest(), 6);
  CHECK(check_stembridge_axioms(g0.vertices, 5, e, f, show).empty());
}
