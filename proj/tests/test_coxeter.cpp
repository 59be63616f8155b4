#include "oracles.hpp"

#include "redword/coxeter.hpp"
#include "redword/partition.hpp"
#include "redword/tableau.hpp"

#include <doctest.h>

#include <set>

using namespace redword;

TEST_CASE("word parsing and formatting") {
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("1 2 1") == Word{1, 2, 1});
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("1,10,2") == Word{1, 10, 2});
  CHECK(format_word({1, 2, 1}) == "121");
  CHECK(format_word({1, 10, 2}) == "1,10,2");
  CHECK_THROWS_AS(parse_word("1a2"), std::invalid_argument);
}

TEST_CASE("permutation products compose as functions") {
  const Permutation a({2, 1, 3});
  const Permutation b({1, 3, 2});
  const Permutation ab = a * b;
  for (int x = 1; x <= 3; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a).is_identity());
  CHECK((ab * ab.inverse()).is_identity());
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("lengths, descents and reduced words in S_n against brute force") {
  for (int n = 2; n <= 4; ++n) {
    const auto S = CoxeterSystem::symmetric(n);
    CHECK(S.rank() == n - 1);
    CHECK(S.elements().size() == static_cast<std::size_t>(n == 2 ? 2 : n == 3 ? 6 : 24));
    for (const auto& w : S.elements()) {
      CHECK(S.length(w) == oracle::inversions(w.one_line()));
      const auto red = S.reduced_words(w);
      const std::set<Word> got(red.begin(), red.end());
      CHECK(got == oracle::reduced_words_brute(w.one_line()));
      CHECK(S.count_reduced_words(w) == red.size());
      for (Letter i : S.right_descents(w)) CHECK(w(i) > w(i + 1));
      for (const auto& r : red) CHECK(oracle::permutation_of(r, n) == w.one_line());
    }
  }
}

TEST_CASE("longest element and staircase counts") {
  const auto S3 = CoxeterSystem::symmetric(3);
  CHECK(format_one_line(S3.longest()) == "[3,2,1]");
  CHECK(S3.reduced_words(S3.longest()) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(S3.count_reduced_words(S3.longest()) == 2);
  CHECK(CoxeterSystem::symmetric(4).count_reduced_words(CoxeterSystem::symmetric(4).longest()) == 16);
  for (int n = 2; n <= 5; ++n) {
    const auto S = CoxeterSystem::symmetric(n);
    CHECK(Integer(S.count_reduced_words(S.longest())) == oracle::count_syt(Partition::staircase(n).parts()));
  }
}

TEST_CASE("parabolic longest elements") {
  const auto S4 = CoxeterSystem::symmetric(4);
  CHECK(S4.parabolic_longest(std::vector<Letter>{}).is_identity());
  CHECK(S4.parabolic_longest(std::vector<Letter>{1, 3}) == S4.evaluate(Word{1, 3}));
  CHECK(S4.parabolic_longest(std::vector<Letter>{1, 2}) == S4.evaluate(Word{1, 2, 1}));
  CHECK(S4.parabolic_longest(std::vector<Letter>{1, 2, 3}) == S4.longest());
}

TEST_CASE("exchange operator") {
  const auto S4 = CoxeterSystem::symmetric(4);
  CHECK(S4.exchange(2, Word{1, 2, 3, 1, 2, 1}) == Word{2, 1, 2, 3, 2, 1});
  const auto S3 = CoxeterSystem::symmetric(3);
  // Exchange walk on S3: loops at 121 for 1 and at 212 for 2.
  CHECK(S3.exchange(1, Word{1, 2, 1}) == Word{1, 2, 1});
  CHECK(S3.exchange(2, Word{1, 2, 1}) == Word{2, 1, 2});
  CHECK(S3.exchange(1, Word{2, 1, 2}) == Word{1, 2, 1});
  CHECK(S3.exchange(2, Word{2, 1, 2}) == Word{2, 1, 2});
  CHECK_THROWS_AS(S4.exchange(1, Word{1, 2}), std::invalid_argument);
  // The image starts with i, is reduced for w0, and s_i w keeps w0.
  for (const auto& r : S4.reduced_words(S4.longest())) {
    for (Letter i : S4.generators()) {
      const Word x = S4.exchange(i, r);
      CHECK(x.front() == i);
      CHECK(S4.evaluate(x) == S4.longest());
    }
  }
}

TEST_CASE("weak order covers") {
  const auto S3 = CoxeterSystem::symmetric(3);
  const auto covers = S3.weak_order_covers(S3.longest());
  CHECK(covers.size() == 2);
  for (const auto& v : covers) CHECK(S3.length(v) == 2);
  CHECK(S3.weak_order_covers(S3.identity()).empty());
}

TEST_CASE("hypercube and dihedral systems") {
  const auto H3 = CoxeterSystem::hypercube(3);
  CHECK(H3.rank() == 3);
  CHECK(H3.elements().size() == 8);
  CHECK(H3.length(H3.longest()) == 3);
  CHECK(H3.count_reduced_words(H3.longest()) == 6);
  // Move-to-front: exchange moves the letter to the front.
  CHECK(H3.exchange(3, Word{1, 3, 2}) == Word{3, 1, 2});
  for (int m = 2; m <= 7; ++m) {
    const auto I = CoxeterSystem::dihedral(m);
    CHECK(I.elements().size() == static_cast<std::size_t>(2 * m));
    CHECK(I.length(I.longest()) == m);
    CHECK(I.count_reduced_words(I.longest()) == 2);
  }
  CHECK(CoxeterSystem::dihedral(3).name() == "Dihedral(3)");
}

TEST_CASE("partitions") {
  CHECK(Partition({3, 1, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS(Partition({1, 2}));
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  CHECK(Partition::staircase(4) == Partition({3, 2, 1}));
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK_FALSE(dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  CHECK(parse_partition("3,2,1") == Partition({3, 2, 1}));
  CHECK(format_partition(Partition({2, 1})) == "[2,1]");
}

TEST_CASE("hook-length count matches brute force") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(hook_length_count(p) == oracle::count_syt(p.parts()));
      CHECK(hook_length_count(p) == oracle::hook_formula(p.parts()));
    }
  }
  CHECK(hook_length_count(Partition({4, 3, 2, 1})) == 768);
  CHECK(hook_length_count(Partition({3, 2, 1})) == 16);
}
