// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Lines tagged "known" restate a claim that is false as written; they are
// printed as FAIL and listed in the summary but do not change the exit code.

#include "redword/edelman_greene.hpp"
#include "redword/factorization.hpp"
#include "redword/markov.hpp"
#include "redword/stanley.hpp"
#include "redword/tableau.hpp"
#include "redword/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

using namespace redword;

namespace {

constexpr double kLimitCountsS4 = 10.0;
constexpr double kLimitCountsS5 = 300.0;
constexpr double kLimitSmallCrystals = 1.0;
constexpr double kLimitIntertwining = 60.0;
constexpr double kLimitMarkovS4 = 30.0;
constexpr double kTvTolerance = 0.02;
constexpr std::uint64_t kTvSteps = 100000;
constexpr std::uint64_t kTvSeed = 42;
constexpr std::uint64_t kRandomS5Seed = 2024;
constexpr int kRandomS5Count = 20;
const std::vector<std::uint64_t> kMeasureSeeds{1, 2, 3};

struct Tally {
  int passed = 0;
  int failed = 0;
  int known = 0;
};

Tally tally;

void report(const std::string& id, bool ok, const std::string& detail, double seconds, bool known_failure = false) {
  const char* status = ok ? "PASS" : "FAIL";
  std::printf("[%s] criterion %-4s %-70s (%.3f s)%s\n", status, id.c_str(), detail.c_str(), seconds,
              (!ok && known_failure) ? "  [known: false as stated]" : "");
  if (ok) {
    ++tally.passed;
  } else if (known_failure) {
    ++tally.known;
  } else {
    ++tally.failed;
  }
}

double timed(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

void criterion1(bool with_s5) {
  for (int n : {3, 4}) {
    bool ok = false;
    std::string detail;
    const double t = timed([&] {
      const auto S = CoxeterSystem::symmetric(n);
      const auto words = S.reduced_words(S.longest());
      const Integer hook = hook_length_count(Partition::staircase(n));
      const std::size_t expected = n == 3 ? 2 : 16;
      ok = words.size() == expected && Integer(words.size()) == hook && S.count_reduced_words(S.longest()) == expected;
      detail = "|Red(w0)| in S" + std::to_string(n) + " = " + std::to_string(words.size()) + ", hook count " + hook.str();
    });
    report("1", ok && t < kLimitCountsS4, detail, t);
  }
  if (!with_s5) {
    std::printf("[SKIP] criterion 1    S5 counts need --s5 (or REDWORD_ACCEPTANCE_S5=1)\n");
    return;
  }
  std::size_t count = 0;
  Integer hook;
  const double t = timed([&] {
    const auto S5 = CoxeterSystem::symmetric(5);
    count = S5.reduced_words(S5.longest()).size();
    hook = hook_length_count(Partition::staircase(5));
  });
  report("1", Integer(count) == hook && t < kLimitCountsS5,
         "|Red(w0)| in S5 = " + std::to_string(count) + " equals hook count " + hook.str(), t);
  report("1", count == 62, "|Red(w0)| in S5 = 62 as stated (enumerated " + std::to_string(count) + ")", t, true);
}

void criterion2() {
  bool ok = false;
  std::string detail;
  const double t = timed([&] {
    const auto S3 = CoxeterSystem::symmetric(3);
    const auto m = to_string(stanley_monomial(S3, S3.longest()).expansion);
    const auto s = to_string(schur_expansion(S3, S3.longest()));
    ok = m == "2*m[1,1,1] + m[2,1]" && s == "s[2,1]";
    detail = "F_w0 = " + m + " = " + s;
  });
  report("2", ok, detail, t);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  const double t = timed([&] {
    const auto S3 = CoxeterSystem::symmetric(3);
    using Edge = std::tuple<std::string, int, std::string>;
    const std::set<Edge> left{{"(1, s1, s2s1)", 1, "(1, s2s1, s2)"}, {"(s1, 1, s2s1)", 1, "(s1, s2, s1)"},
                              {"(s2, s1, s2)", 2, "(s2s1, 1, s2)"},  {"(s2s1, 1, s2)", 1, "(s2s1, s2, 1)"},
                              {"(1, s2s1, s2)", 2, "(s2, s1, s2)"},  {"(s1, s2s1, 1)", 2, "(s2s1, s2, 1)"},
                              {"(1, s1, s2s1)", 2, "(s1, 1, s2s1)"}, {"(s1, s2, s1)", 1, "(s1, s2s1, 1)"}};
    const std::set<Edge> right{{"[[1,1],[2]]", 2, "[[1,1],[3]]"}, {"[[1,3],[3]]", 1, "[[2,3],[3]]"},
                               {"[[2,2],[3]]", 2, "[[2,3],[3]]"}, {"[[1,2],[3]]", 1, "[[2,2],[3]]"},
                               {"[[1,2],[2]]", 2, "[[1,3],[2]]"}, {"[[1,1],[3]]", 1, "[[1,2],[3]]"},
                               {"[[1,1],[2]]", 1, "[[1,2],[2]]"}, {"[[1,3],[2]]", 2, "[[1,3],[3]]"}};
    const std::map<std::string, std::string> q_map{
        {"(1, s1, s2s1)", "[[1,1],[2]]"}, {"(1, s2s1, s2)", "[[1,2],[2]]"}, {"(s1, 1, s2s1)", "[[1,1],[3]]"},
        {"(s2, s1, s2)", "[[1,3],[2]]"},  {"(s2s1, 1, s2)", "[[1,3],[3]]"}, {"(s2s1, s2, 1)", "[[2,3],[3]]"},
        {"(s1, s2, s1)", "[[1,2],[3]]"},  {"(s1, s2s1, 1)", "[[2,2],[3]]"}};

    const auto g = build_crystal(S3, S3.longest(), 3);
    std::set<Edge> got_left;
    for (const auto& e : g.edges) {
      got_left.insert({format_factorization_tuple(g.vertices[e.source]), e.label,
                       format_factorization_tuple(g.vertices[e.target])});
    }
    ok = ok && g.vertices.size() == 8 && got_left == left;

    const CrystalOp<Tableau> te = tableau_crystal_e, tf = tableau_crystal_f;
    const auto h = make_crystal_graph(generate_ssyt(Partition({2, 1}), 3), 2, te, tf);
    std::set<Edge> got_right;
    for (const auto& e : h.edges) {
      got_right.insert({format_tableau(h.vertices[e.source]), e.label, format_tableau(h.vertices[e.target])});
    }
    ok = ok && h.vertices.size() == 8 && got_right == right;

    std::set<Edge> mapped;
    for (const auto& v : g.vertices) {
      const auto name = format_factorization_tuple(v);
      const auto q = format_tableau(eg_insert(v).Q);
      ok = ok && q_map.count(name) && q_map.at(name) == q;
    }
    for (const auto& [a, i, b] : got_left) mapped.insert({q_map.at(a), i, q_map.at(b)});
    ok = ok && mapped == right;
    detail = "B(w0, 3) and B((2,1), 3): " + std::to_string(g.vertices.size()) + "+" +
             std::to_string(h.vertices.size()) + " vertices, " + std::to_string(got_left.size()) + "+" +
             std::to_string(got_right.size()) + " edges, Q map matches";
  });
  report("3", ok && t < kLimitSmallCrystals, detail, t);
}

void criterion4() {
  std::size_t cases = 0, good = 0;
  const double t = timed([&] {
    const auto S4 = CoxeterSystem::symmetric(4);
    for (const auto& w : S4.elements()) {
      const auto r = intertwining_check(S4, w);
      cases += r.cases;
      good += r.passed ? r.cases : 0;
    }
  });
  report("4", good == cases && t < kLimitIntertwining, "intertwining over S4: " + ratio(good, cases) + " checks", t);
}

void criterion5() {
  std::size_t total = 0, good = 0;
  const double t = timed([&] {
    const auto S4 = CoxeterSystem::symmetric(4);
    const auto S5 = CoxeterSystem::symmetric(5);
    for (const auto& w : S4.elements()) {
      ++total;
      good += three_way_schur_check(S4, w).passed;
    }
    for (const auto& w : random_elements(S5, kRandomS5Count, kRandomS5Seed)) {
      ++total;
      good += three_way_schur_check(S5, w).passed;
    }
  });
  report("5", good == total, "three-way Schur agreement, S4 + 20 random S5: " + ratio(good, total), t);
}

void criterion6() {
  std::size_t n = 0, support = 0, conj = 0, literal = 0, skew = 0, nonid = 0;
  const double t = timed([&] {
    const auto S4 = CoxeterSystem::symmetric(4);
    for (const auto& w : S4.elements()) {
      ++n;
      support += support_interval_check(S4, w).passed;
      if (w.is_identity()) continue;
      ++nonid;
      conj += omega_duality_check(S4, w, OmegaPartner::Conjugate).passed;
      literal += omega_duality_check(S4, w, OmegaPartner::LeftLongest).passed;
      skew += skew_by_s1_check(S4, w).passed;
    }
  });
  report("6", support == n && skew == nonid,
         "S4 extremal coefficients " + ratio(support, n) + ", s1-perp " + ratio(skew, nonid), t);
  report("6", conj == nonid, "S4 omega(F_w) = F_{w0 w w0}: " + ratio(conj, nonid), t);
  report("6", literal == nonid, "S4 omega(F_w) = F_{w0 w} as stated: " + ratio(literal, nonid), t, true);
}

void criterion7() {
  std::size_t total = 0, good = 0;
  const double t = timed([&] {
    const auto S4 = CoxeterSystem::symmetric(4);
    for (const auto& w : S4.elements()) {
      total += 2;
      good += ck_crystal_components_check(S4, w).passed;
      good += same_p_tableau_iff_ck_equivalent(S4, w).passed;
    }
  });
  report("7", good == total, "CK classes = crystal components, P-iff-CK over S4: " + ratio(good, total), t);
}

void criterion8() {
  for (int n : {3, 4}) {
    std::size_t total = 0, good = 0;
    const double t = timed([&] {
      const auto S = CoxeterSystem::symmetric(n);
      std::vector<ProbabilityMeasure> measures{ProbabilityMeasure::uniform(n - 1)};
      for (auto seed : kMeasureSeeds) measures.push_back(random_measure(n - 1, seed));
      const Integer red(S.count_reduced_words(S.longest()));
      for (const auto& P : measures) {
        ++total;
        const auto T = build_chain(S, P);
        const auto sp = spectrum(S, P);
        Integer msum = 0;
        for (const auto& term : sp) msum += term.multiplicity;
        const auto pi = stationary_distribution(S, P);
        Rational pisum = 0;
        for (const auto& x : pi) pisum += x;
        good += is_column_stochastic(T) &&
                characteristic_polynomial(T.entries) == predicted_characteristic_polynomial(sp) &&
                multiply(T.entries, pi) == pi && pisum == 1 && msum == red;
      }
    });
    const bool in_time = n < 4 || t < kLimitMarkovS4;
    report("8", good == total && in_time,
           "exchange chain S" + std::to_string(n) + ", uniform + 3 seeded measures: " + ratio(good, total), t);
  }
}

void criterion9() {
  std::size_t total = 0, good = 0;
  const double t = timed([&] {
    for (int n = 1; n <= 4; ++n) {
      std::vector<ProbabilityMeasure> measures{ProbabilityMeasure::uniform(n)};
      for (auto seed : kMeasureSeeds) measures.push_back(random_measure(n, seed));
      for (const auto& P : measures) {
        ++total;
        const auto a = promotion_chain(NaturalPoset::antichain(n), P);
        const auto b = tsetlin_chain(n, P);
        good += a.states == b.states && a.entries == b.entries;
      }
    }
  });
  report("9", good == total, "promotion on antichain = Tsetlin, n <= 4: " + ratio(good, total), t);
}

void criterion10() {
  double tv = 1.0;
  const double t = timed([&] {
    const auto S3 = CoxeterSystem::symmetric(3);
    const auto P = ProbabilityMeasure::uniform(2);
    const auto sim = simulate(S3, P, kTvSteps, kTvSeed);
    tv = total_variation(sim.frequencies, stationary_distribution(S3, P));
  });
  char buf[96];
  std::snprintf(buf, sizeof buf, "S3 uniform, 1e5 steps, seed %llu: TV = %.5f < %.2f",
                static_cast<unsigned long long>(kTvSeed), tv, kTvTolerance);
  report("10", tv < kTvTolerance, buf, t);
}

void criterion11() {
  bool ok = true;
  const double t = timed([&] {
    const auto S3 = CoxeterSystem::symmetric(3);
    const auto S4 = CoxeterSystem::symmetric(4);
    const auto b = parse_factorization(S4, "(32)(31)(2)");
    const auto e2 = crystal_e(b, 2);
    const auto f2 = crystal_f(b, 2);
    ok = ok && e2 && format_factorization(*e2) == "(2)(321)(2)";
    ok = ok && f2 && format_factorization(*f2) == "(321)(3)(2)";
    const auto eg = eg_insert(parse_factorization(S4, "(1)(2)(32)"));
    ok = ok && format_tableau(eg.P) == "[[1,3],[2],[3]]" && format_tableau(eg.Q) == "[[1,1],[2],[3]]";
    ok = ok && p_transpose_reading_word(eg.P) == Word{3, 1, 2, 3};
    ok = ok && S4.exchange(2, Word{1, 2, 3, 1, 2, 1}) == Word{2, 1, 2, 3, 2, 1};
    ok = ok && S3.exchange(1, Word{1, 2, 1}) == Word{1, 2, 1};
  });
  report("11", ok, "e2/f2 on (32)(31)(2), EG pair and reading word of (1)(2)(32), exchange(2, 123121)", t);
}

}  // namespace

int main(int argc, char** argv) {
  bool with_s5 = false;
  if (const char* env = std::getenv("REDWORD_ACCEPTANCE_S5"); env && std::strcmp(env, "0") != 0 && *env) with_s5 = true;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--s5") == 0) {
      with_s5 = true;
    } else {
      std::fprintf(stderr, "usage: %s [--s5]\n", argv[0]);
      return 2;
    }
  }
  criterion1(with_s5);
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("summary: %d passed, %d failed, %d known false as stated\n", tally.passed, tally.failed, tally.known);
  return tally.failed == 0 ? 0 : 1;
}
