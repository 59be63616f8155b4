#pragma once

// Test-side oracles. Each one recomputes a quantity from first principles
// with no code shared with the library: plain vectors, brute force, and
// textbook formulas.

#include "redword/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using redword::Integer;
using redword::Rational;

// Applies the word to the identity by swapping adjacent positions, one
// letter at a time, and tracks inversions to decide reducedness.
inline std::vector<int> permutation_of(const Word& w, int n) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int i : w) std::swap(p[i - 1], p[i]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) c += p[a] > p[b];
  return c;
}

// Every word of length inv(p) over {1..n-1} that produces p: exponential,
// fine for n <= 5 and short elements.
inline std::set<Word> reduced_words_brute(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  const int l = inversions(p);
  std::set<Word> out;
  Word cur;
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> q) {
    if (static_cast<int>(cur.size()) == l) {
      if (q == p) out.insert(cur);
      return;
    }
    for (int i = 1; i < n; ++i) {
      if (q[i - 1] > q[i]) continue;  // only length-increasing steps
      auto r = q;
      std::swap(r[i - 1], r[i]);
      cur.push_back(i);
      rec(r);
      cur.pop_back();
    }
  };
  std::vector<int> id(n);
  for (int k = 0; k < n; ++k) id[k] = k + 1;
  rec(id);
  return out;
}

// Standard tableaux of a shape counted by filling cells with 1..N in order:
// number k may go in row r iff the row is not full and the row above is longer.
inline Integer count_syt(std::vector<int> shape) {
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer(std::vector<int>)> rec = [&](std::vector<int> filled) -> Integer {
    if (filled == shape) return 1;
    if (auto it = memo.find(filled); it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r])) {
        ++filled[r];
        total += rec(filled);
        --filled[r];
      }
    }
    return memo[filled] = total;
  };
  return rec(std::vector<int>(shape.size(), 0));
}

// Semistandard fillings of `shape` with entries <= n and content mu.
inline Integer count_ssyt_with_content(const std::vector<int>& shape, const std::vector<int>& mu, int n) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<int> left(n, 0);
  for (std::size_t k = 0; k < mu.size() && static_cast<int>(k) < n; ++k) left[k] = mu[k];
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    for (int v = 1; v <= n; ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --left[v - 1];
      rec(k + 1);
      ++left[v - 1];
    }
  };
  rec(0);
  return count;
}

// Decreasing factorizations of p into l factors, by splitting each reduced
// word into l consecutive (possibly empty) strictly decreasing blocks.
// Returns the set of block tuples in display order (leftmost block first).
inline std::set<std::vector<Word>> factorizations_brute(const std::vector<int>& p, int l) {
  std::set<std::vector<Word>> out;
  for (const Word& w : reduced_words_brute(p)) {
    std::vector<Word> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (static_cast<int>(blocks.size()) == l) {
        if (pos == w.size()) out.insert(blocks);
        return;
      }
      for (std::size_t end = pos; end <= w.size(); ++end) {
        if (end > pos + 1 && w[end - 1] >= w[end - 2]) break;
        blocks.emplace_back(w.begin() + pos, w.begin() + end);
        rec(end);
        blocks.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

// det(M) by cofactor-free Gaussian elimination written out afresh here.
inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(a[p], a[c]), d = -d;
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// det(x I - A) at a point.
inline Rational charpoly_at(const std::vector<std::vector<Rational>>& a, const Rational& x) {
  auto m = a;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (auto& v : m[r]) v = -v;
    m[r][r] += x;
  }
  return det(m);
}

// Hook-length formula for the count of standard tableaux.
inline Integer hook_formula(const std::vector<int>& shape) {
  int size = 0;
  for (int s : shape) size += s;
  Integer num = 1;
  for (int k = 2; k <= size; ++k) num *= k;
  Integer den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
      den *= shape[r] - c + below;
    }
  }
  return num / den;
}

}  // namespace oracle
