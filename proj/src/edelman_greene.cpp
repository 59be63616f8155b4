#include "redword/edelman_greene.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace redword {

RowInsertion eg_insert_letter(std::vector<Letter> row, Letter a) {
  RowInsertion out;
  const auto it = std::upper_bound(row.begin(), row.end(), a);
  if (it == row.end()) {
    row.push_back(a);
    out.row = std::move(row);
    return out;
  }
  const Letter b = *it;
  if (b == a + 1 && std::binary_search(row.begin(), row.end(), a)) {
    out.special = true;
  } else {
    *it = a;
  }
  out.bumped = b;
  out.row = std::move(row);
  return out;
}

namespace {

// Inserts a into P; returns the row index of the new cell.
int insert_into(Tableau& P, Letter a) {
  std::optional<Letter> carry = a;
  int r = 0;
  for (; carry; ++r) {
    if (r == static_cast<int>(P.rows().size())) {
      P.append(r, *carry);
      return r;
    }
    auto step = eg_insert_letter(P.rows()[r], *carry);
    const bool grew = !step.bumped;
    P.row(r) = std::move(step.row);
    if (grew) return r;
    carry = step.bumped;
  }
  return r;
}

}  // namespace

EGPair eg_insert(const DecreasingFactorization& f) {
  EGPair out;
  for (int k = 1; k <= f.factor_count(); ++k) {
    const auto& factor = f.factor(k);
    for (auto it = factor.rbegin(); it != factor.rend(); ++it) {
      const int r = insert_into(out.P, *it);
      out.Q.append(r, k);
    }
  }
  return out;
}

EGPair eg_insert_word(const Word& w) {
  EGPair out;
  for (std::size_t step = 0; step < w.size(); ++step) {
    const int r = insert_into(out.P, w[step]);
    out.Q.append(r, static_cast<int>(step) + 1);
  }
  return out;
}

Word p_transpose_reading_word(const Tableau& P) { return P.transpose().column_reading_word(); }

std::vector<CKNeighbor> ck_relations(const Word& w) {
  std::vector<CKNeighbor> out;
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    const Letter x = w[p], y = w[p + 1], z = w[p + 2];
    auto emit = [&](Letter u, Letter v, Letter t, CKRelation kind, bool forward) {
      Word n = w;
      n[p] = u;
      n[p + 1] = v;
      n[p + 2] = t;
      out.push_back({std::move(n), p, kind, forward});
    };
    // (a+1) a (a+1) <-> a (a+1) a
    if (x == z && y == x - 1) emit(y, x, y, CKRelation::Braid, true);
    if (x == z && y == x + 1) emit(y, x, y, CKRelation::Braid, false);
    // b a c <-> b c a with a < b < c
    if (y < x && x < z) emit(x, z, y, CKRelation::BacBca, true);
    if (z < x && x < y) emit(x, z, y, CKRelation::BacBca, false);
    // c a b <-> a c b with a < b < c
    if (y < z && z < x) emit(y, x, z, CKRelation::CabAcb, true);
    if (x < z && z < y) emit(y, x, z, CKRelation::CabAcb, false);
  }
  return out;
}

std::vector<Word> ck_neighbors(const Word& w) {
  std::vector<Word> out;
  for (auto& n : ck_relations(w)) out.push_back(std::move(n.word));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CKGraph ck_graph(const CoxeterSystem& system, const Permutation& w) {
  CKGraph g;
  g.vertices = system.reduced_words(w);
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& rel : ck_relations(g.vertices[s])) {
      const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), rel.word);
      if (it == g.vertices.end() || *it != rel.word) {
        throw std::logic_error("Coxeter-Knuth move left Red(w): " + format_word(rel.word));
      }
      const auto t = static_cast<std::size_t>(it - g.vertices.begin());
      if (s < t) {
        g.edges.emplace_back(s, t);
        g.kinds.push_back(rel.relation);
      }
      parent[find(s)] = find(t);
    }
  }
  std::map<std::size_t, std::size_t> ids;
  g.component.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    g.component[s] = ids.emplace(find(s), ids.size()).first->second;
  }
  g.component_count = ids.size();
  return g;
}

std::vector<std::vector<Word>> ck_components(const CoxeterSystem& system, const Permutation& w) {
  const CKGraph g = ck_graph(system, w);
  std::vector<std::vector<Word>> out(g.component_count);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) out[g.component[s]].push_back(g.vertices[s]);
  return out;
}

VerificationReport same_p_tableau_iff_ck_equivalent(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"EG insertion tableau equality <=> Coxeter-Knuth equivalence"};
  const CKGraph g = ck_graph(system, w);
  std::vector<Tableau> P;
  for (const Word& word : g.vertices) P.push_back(eg_insert_word(word).P);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a; b < g.vertices.size(); ++b) {
      ++report.cases;
      const bool same_p = P[a] == P[b];
      const bool same_class = g.component[a] == g.component[b];
      if (same_p != same_class) {
        report.fail(format_word(g.vertices[a]) + " vs " + format_word(g.vertices[b]) + ": same P = " +
                    (same_p ? "yes" : "no") + ", CK-equivalent = " + (same_class ? "yes" : "no"));
      }
    }
  }
  return report;
}

VerificationReport intertwining_check(const CoxeterSystem& system, const Permutation& w, int factors) {
  VerificationReport report{"Q-tableau map intertwines the crystal operators"};
  if (factors == 0) factors = default_factor_count(system, w);
  auto show = [](const std::optional<Tableau>& t) { return t ? format_tableau(*t) : std::string("null"); };
  for (const auto& b : decreasing_factorizations(system, w, factors)) {
    const Tableau q = eg_insert(b).Q;
    for (int i = 1; i < factors; ++i) {
      for (const bool raising : {true, false}) {
        ++report.cases;
        const auto moved = raising ? crystal_e(b, i) : crystal_f(b, i);
        const std::optional<Tableau> lhs = moved ? std::optional<Tableau>(eg_insert(*moved).Q) : std::nullopt;
        const auto rhs = raising ? tableau_crystal_e(q, i) : tableau_crystal_f(q, i);
        if (lhs != rhs) {
          report.fail(std::string(raising ? "e_" : "f_") + std::to_string(i) + " at " + format_factorization(b) +
                      ": Q after = " + show(lhs) + ", operator on Q = " + show(rhs));
        }
      }
    }
  }
  return report;
}

VerificationReport ck_crystal_components_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"crystal components = Coxeter-Knuth classes"};
  const auto crystal = build_crystal(system, w, default_factor_count(system, w));
  const CKGraph ck = ck_graph(system, w);
  const std::size_t n = crystal.component_count();
  ++report.cases;
  if (n != ck.component_count) {
    report.fail(system.describe(w) + ": " + std::to_string(n) + " crystal components but " +
                std::to_string(ck.component_count) + " Coxeter-Knuth classes");
  }
  std::vector<std::optional<std::size_t>> class_of(n);
  std::vector<std::optional<Tableau>> p_of(n);
  std::vector<std::vector<Word>> words_of(n);
  for (std::size_t v = 0; v < crystal.vertices.size(); ++v) {
    ++report.cases;
    const auto& b = crystal.vertices[v];
    const std::size_t c = crystal.component[v];
    const Word word = b.word();
    words_of[c].push_back(word);
    const auto it = std::lower_bound(ck.vertices.begin(), ck.vertices.end(), word);
    if (it == ck.vertices.end() || *it != word) {
      report.fail(format_factorization(b) + " reads " + format_word(word) + ", not a reduced word of w");
      continue;
    }
    const std::size_t k = ck.component[it - ck.vertices.begin()];
    if (!class_of[c]) class_of[c] = k;
    if (*class_of[c] != k) report.fail("crystal component of " + format_factorization(b) + " meets two CK classes");
    const Tableau p = eg_insert(b).P;
    if (!p_of[c]) p_of[c] = p;
    if (*p_of[c] != p) report.fail("P tableau not constant on the component of " + format_factorization(b));
  }
  std::vector<std::size_t> hit;
  for (const auto& k : class_of) {
    if (k) hit.push_back(*k);
  }
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) report.fail("two crystal components share a CK class");
  // Membership: each class is exactly the words of its component, since l(w)
  // factors realise every reduced word as singletons.
  for (std::size_t c = 0; c < n; ++c) {
    if (!class_of[c]) continue;
    std::vector<Word> expected;
    for (std::size_t s = 0; s < ck.vertices.size(); ++s) {
      if (ck.component[s] == *class_of[c]) expected.push_back(ck.vertices[s]);
    }
    auto got = words_of[c];
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    if (got != expected) report.fail("component words differ from their CK class for " + system.describe(w));
  }
  return report;
}

VerificationReport ck_edge_crystal_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"Coxeter-Knuth moves are f_i f_{i+1} e_i e_{i+1}"};
  const int l = system.length(w);
  for (const Word& word : system.reduced_words(w)) {
    const auto b = DecreasingFactorization::singletons(system, word);
    for (const auto& move : ck_relations(word)) {
      if (!move.forward) continue;
      ++report.cases;
      const int i = l - static_cast<int>(move.position) - 2;
      std::optional<DecreasingFactorization> x = crystal_e(b, i + 1);
      if (x) x = crystal_e(*x, i);
      if (x) x = crystal_f(*x, i + 1);
      if (x) x = crystal_f(*x, i);
      const auto v = DecreasingFactorization::singletons(system, move.word);
      if (!x || *x != v) {
        report.fail(format_word(word) + " -> " + format_word(move.word) + " at i = " + std::to_string(i) + ": got " +
                    (x ? format_factorization(*x) : std::string("null")));
      }
    }
  }
  return report;
}

}  // namespace redword
