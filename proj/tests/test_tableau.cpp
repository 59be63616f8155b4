#include "oracles.hpp"

#include "redword/crystal_graph.hpp"
#include "redword/symfunc.hpp"
#include "redword/tableau.hpp"

#include <doctest.h>

using namespace redword;

namespace {

const CrystalOp<Tableau> kE = [](const Tableau& t, int i) { return tableau_crystal_e(t, i); };
const CrystalOp<Tableau> kF = [](const Tableau& t, int i) { return tableau_crystal_f(t, i); };

}  // namespace

TEST_CASE("tableau basics") {
  const auto t = parse_tableau("[[1,1],[2]]");
  CHECK(t.shape() == Partition({2, 1}));
  CHECK(t.is_semistandard());
  CHECK_FALSE(t.is_standard());
  CHECK(format_tableau(t) == "[[1,1],[2]]");
  CHECK(t.row_reading_word() == std::vector<int>{2, 1, 1});
  CHECK(t.column_reading_word() == std::vector<int>{2, 1, 1});
  CHECK(parse_tableau("[[1,3],[2]]").column_reading_word() == std::vector<int>{2, 1, 3});
  CHECK(t.transpose() == parse_tableau("[[1,2],[1]]"));
  CHECK_FALSE(parse_tableau("[[2,1]]").is_semistandard());
  CHECK(yamanouchi_tableau(Partition({3, 1})) == parse_tableau("[[1,1,1],[2]]"));
}

TEST_CASE("SSYT enumeration against brute-force Kostka counts") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        CHECK(kostka_number(lambda, mu) == oracle::count_ssyt_with_content(lambda.parts(), mu.parts(), n));
      }
      const auto all = generate_ssyt(lambda, 3);
      for (const auto& t : all) CHECK(t.is_semistandard());
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }
  CHECK(generate_ssyt(Partition({2, 1}), 3).size() == 8);
  CHECK(standard_tableaux(Partition({3, 2, 1})).size() == 16);
  CHECK(kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
}

TEST_CASE("Schur polynomials") {
  const auto s21 = schur_polynomial(Partition({2, 1}), 3);
  CHECK(to_string(s21) == "2*m[1,1,1] + m[2,1]");
  CHECK(schur_polynomial(Partition({2, 1}), 2).coefficient(Partition({1, 1, 1})) == 0);
}

TEST_CASE("tableau crystal B((2,1)) with entries <= 3") {
  const auto g = make_crystal_graph(generate_ssyt(Partition({2, 1}), 3), 2, kE, kF);
  REQUIRE(g.vertices.size() == 8);
  REQUIRE(g.edges.size() == 8);
  const std::vector<std::tuple<std::string, int, std::string>> expected{
      {"[[1,1],[2]]", 2, "[[1,1],[3]]"}, {"[[1,3],[3]]", 1, "[[2,3],[3]]"}, {"[[2,2],[3]]", 2, "[[2,3],[3]]"},
      {"[[1,2],[3]]", 1, "[[2,2],[3]]"}, {"[[1,2],[2]]", 2, "[[1,3],[2]]"}, {"[[1,1],[3]]", 1, "[[1,2],[3]]"},
      {"[[1,1],[2]]", 1, "[[1,2],[2]]"}, {"[[1,3],[2]]", 2, "[[1,3],[3]]"}};
  for (const auto& [from, label, to] : expected) {
    const auto result = tableau_crystal_f(parse_tableau(from), label);
    REQUIRE(result);
    CHECK(format_tableau(*result) == to);
  }
  CHECK(g.component_count() == 1);
  CHECK(g.highest_weight.size() == 1);
  CHECK(g.vertices[g.highest_weight.front()] == parse_tableau("[[1,1],[2]]"));
}

TEST_CASE("tableau crystal axioms and Stembridge axioms") {
  const std::function<std::string(const Tableau&)> show = [](const Tableau& t) { return format_tableau(t); };
  for (int n = 2; n <= 4; ++n) {
    const std::function<std::vector<int>(const Tableau&)> wt = [n](const Tableau& t) { return tableau_weight(t, n); };
    for (int k = 1; k <= 4; ++k) {
      for (const auto& lambda : partitions_of(k, n)) {
        const auto v = generate_ssyt(lambda, n);
        CHECK(check_crystal_axioms(v, n - 1, kE, kF, wt, show).empty());
        CHECK(check_stembridge_axioms(v, n - 1, kE, kF, show).empty());
        // Every f keeps the tableau semistandard of the same shape.
        for (const auto& t : v) {
          for (int i = 1; i < n; ++i) {
            if (auto y = tableau_crystal_f(t, i)) {
              CHECK(y->is_semistandard());
              CHECK(y->shape() == lambda);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("a deliberately broken operator is caught by the axiom checker") {
  // f that skips the bracketing rule: change the first 1 to 2 if allowed.
  const CrystalOp<Tableau> bad_f = [](const Tableau& t, int i) -> std::optional<Tableau> {
    auto rows = t.rows();
    for (auto& row : rows)
      for (auto& x : row)
        if (x == i) {
          x = i + 1;
          Tableau out(rows);
          if (out.is_semistandard()) return out;
          return std::nullopt;
        }
    return std::nullopt;
  };
  const std::function<std::vector<int>(const Tableau&)> wt = [](const Tableau& t) { return tableau_weight(t, 3); };
  const std::function<std::string(const Tableau&)> show = [](const Tableau& t) { return format_tableau(t); };
  const auto v = generate_ssyt(Partition({2, 1}), 3);
  CHECK_FALSE(check_crystal_axioms(v, 2, kE, bad_f, wt, show).empty());
}
