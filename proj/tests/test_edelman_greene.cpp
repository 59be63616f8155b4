#include "redword/edelman_greene.hpp"
#include "redword/factorization.hpp"

#include <doctest.h>

#include <map>

using namespace redword;

namespace {

const auto S3 = CoxeterSystem::symmetric(3);
const auto S4 = CoxeterSystem::symmetric(4);

}  // namespace

TEST_CASE("row insertion rule") {
  auto r = eg_insert_letter({1, 3}, 4);
  CHECK(r.row == std::vector<Letter>{1, 3, 4});
  CHECK_FALSE(r.bumped);
  r = eg_insert_letter({1, 3}, 2);
  CHECK(r.row == std::vector<Letter>{1, 2});
  CHECK(r.bumped == 3);
  CHECK_FALSE(r.special);
  // a and a+1 both present: row unchanged, a+1 moves on.
  r = eg_insert_letter({1, 2, 3}, 2);
  CHECK(r.row == std::vector<Letter>{1, 2, 3});
  CHECK(r.bumped == 3);
  CHECK(r.special);
}

TEST_CASE("worked example: (1)(2)(32)") {
  const auto f = parse_factorization(S4, "(1)(2)(32)");
  // Intermediate steps: factor 1 alone, then factors 1 and 2.
  const auto one = eg_insert(DecreasingFactorization(S4, {{3, 2}}));
  CHECK(format_tableau(one.P) == "[[2,3]]");
  CHECK(format_tableau(one.Q) == "[[1,1]]");
  const auto two = eg_insert(DecreasingFactorization(S4, {{3, 2}, {2}}));
  CHECK(format_tableau(two.P) == "[[2,3],[3]]");
  CHECK(format_tableau(two.Q) == "[[1,1],[2]]");
  const auto pq = eg_insert(f);
  CHECK(format_tableau(pq.P) == "[[1,3],[2],[3]]");
  CHECK(format_tableau(pq.Q) == "[[1,1],[2],[3]]");
  CHECK(p_transpose_reading_word(pq.P) == Word{3, 1, 2, 3});
  CHECK(S4.evaluate(Word{3, 1, 2, 3}) == f.target());
  CHECK(is_highest_weight(f));
  CHECK(f.weight() == std::vector<int>{2, 1, 1});
}

TEST_CASE("word insertion of w0 in S4") {
  for (const auto& r : S4.reduced_words(S4.longest())) {
    const auto pq = eg_insert_word(r);
    CHECK(format_tableau(pq.P) == "[[1,2,3],[2,3],[3]]");
    CHECK(pq.Q.is_standard());
    CHECK(pq.Q.shape() == Partition({3, 2, 1}));
  }
}

TEST_CASE("Q is semistandard of the same shape as P, P is row and column strict") {
  for (const auto& w : S4.elements()) {
    for (const auto& f : decreasing_factorizations(S4, w, 3)) {
      const auto pq = eg_insert(f);
      CHECK(pq.P.shape() == pq.Q.shape());
      CHECK(pq.P.is_row_strict());
      CHECK(pq.Q.is_semistandard());
      CHECK(pq.Q.content(3) == f.weight());
    }
  }
}

TEST_CASE("B(w0) for S3: the Q map sends each factorization to its tableau") {
  const std::map<std::string, std::string> expected{
      {"(1, s1, s2s1)", "[[1,1],[2]]"}, {"(1, s2s1, s2)", "[[1,2],[2]]"}, {"(s1, 1, s2s1)", "[[1,1],[3]]"},
      {"(s2, s1, s2)", "[[1,3],[2]]"},  {"(s2s1, 1, s2)", "[[1,3],[3]]"}, {"(s2s1, s2, 1)", "[[2,3],[3]]"},
      {"(s1, s2, s1)", "[[1,2],[3]]"},  {"(s1, s2s1, 1)", "[[2,2],[3]]"}};
  for (const auto& [node, tableau] : expected) {
    CHECK(format_tableau(eg_insert(parse_factorization(S3, node)).Q) == tableau);
  }
  CHECK(intertwining_check(S3, S3.longest(), 3).passed);
}

TEST_CASE("Coxeter-Knuth relations") {
  const auto moves = ck_relations(Word{1, 2, 1});
  REQUIRE(moves.size() == 1);
  CHECK(moves.front().word == Word{2, 1, 2});
  CHECK(moves.front().relation == CKRelation::Braid);
  // b a c ~ b c a with a < b < c: 213 ~ 231
  CHECK(ck_neighbors(Word{2, 1, 3}) == std::vector<Word>{{2, 3, 1}});
  // c a b ~ a c b: 312 ~ 132
  CHECK(ck_neighbors(Word{3, 1, 2}) == std::vector<Word>{{1, 3, 2}});
  CHECK(ck_neighbors(Word{1, 3}).empty());
}

TEST_CASE("Coxeter-Knuth components") {
  // s1 s3: two words of length two, no three-letter window, two classes.
  const auto comps = ck_components(S4, S4.evaluate(Word{1, 3}));
  CHECK(comps.size() == 2);
  CHECK(ck_components(S3, S3.longest()).size() == 1);
  CHECK(ck_components(S4, S4.longest()).size() == 1);  // F_{w0} = s[3,2,1]
  const auto g = ck_graph(S4, S4.longest());
  CHECK(g.vertices.size() == 16);
  CHECK(g.component_count == 1);
}

TEST_CASE("exhaustive S4 theorems") {
  for (const auto& w : S4.elements()) {
    CAPTURE(S4.describe(w));
    CHECK(same_p_tableau_iff_ck_equivalent(S4, w).passed);
    CHECK(intertwining_check(S4, w).passed);
    CHECK(ck_crystal_components_check(S4, w).passed);
    CHECK(ck_edge_crystal_check(S4, w).passed);
    for (const auto& hw : highest_weights(S4, w)) {
      const Word r = p_transpose_reading_word(eg_insert(hw.element).P);
      CHECK(static_cast<int>(r.size()) == S4.length(w));
      CHECK(S4.evaluate(r) == w);
    }
  }
}

TEST_CASE("intertwining also holds with more factors than the length") {
  for (const auto& w : S3.elements()) CHECK(intertwining_check(S3, w, 4).passed);
}
