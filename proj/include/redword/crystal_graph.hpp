#pragma once

// Generic machinery for finite type A crystals given by partial operators
// e_i, f_i : V -> optional<V>, i = 1..rank. Used for both the factorization
// crystal and the tableau crystal.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace redword {

struct CrystalEdge {
  std::size_t source;
  std::size_t target;
  int label;
  auto operator<=>(const CrystalEdge&) const = default;
};

template <class V>
struct CrystalGraph {
  std::vector<V> vertices;
  std::vector<CrystalEdge> edges;  // source --label--> target means f_label(source) = target
  std::vector<std::size_t> component;  // component id per vertex, numbered by first vertex
  std::vector<std::size_t> highest_weight;  // vertex indices killed by every e_i
  int rank = 0;

  std::size_t component_count() const {
    return component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
  }
  std::optional<std::size_t> index_of(const V& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

template <class V>
using CrystalOp = std::function<std::optional<V>(const V&, int)>;

template <class V>
int crystal_epsilon(const V& x, int i, const CrystalOp<V>& e) {
  int d = 0;
  for (auto y = e(x, i); y; y = e(*y, i)) ++d;
  return d;
}

template <class V>
int crystal_phi(const V& x, int i, const CrystalOp<V>& f) {
  int d = 0;
  for (auto y = f(x, i); y; y = f(*y, i)) ++d;
  return d;
}

/// Builds the crystal graph on `vertices` (sorted and deduplicated here).
/// Throws if some f_i leaves the vertex set.
template <class V>
CrystalGraph<V> make_crystal_graph(std::vector<V> vertices, int rank, const CrystalOp<V>& e, const CrystalOp<V>& f) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  CrystalGraph<V> g;
  g.vertices = std::move(vertices);
  g.rank = rank;
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n; ++s) {
    bool highest = true;
    for (int i = 1; i <= rank; ++i) {
      if (auto y = f(g.vertices[s], i)) {
        const auto t = g.index_of(*y);
        if (!t) throw std::logic_error("crystal operator f_" + std::to_string(i) + " left the vertex set");
        g.edges.push_back({s, *t, i});
        parent[find(s)] = find(*t);
      }
      if (e(g.vertices[s], i)) highest = false;
    }
    if (highest) g.highest_weight.push_back(s);
  }
  std::map<std::size_t, std::size_t> ids;
  g.component.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto root = find(s);
    auto [it, inserted] = ids.emplace(root, ids.size());
    g.component[s] = it->second;
  }
  return g;
}

/// Closure of `seeds` under all f_i.
template <class V>
std::vector<V> close_under_f(std::vector<V> seeds, int rank, const CrystalOp<V>& f) {
  std::vector<V> found;
  std::vector<V> stack = std::move(seeds);
  while (!stack.empty()) {
    V x = std::move(stack.back());
    stack.pop_back();
    auto it = std::lower_bound(found.begin(), found.end(), x);
    if (it != found.end() && *it == x) continue;
    found.insert(it, x);
    for (int i = 1; i <= rank; ++i) {
      if (auto y = f(x, i)) stack.push_back(std::move(*y));
    }
  }
  return found;
}

/// Checks the crystal axioms on every vertex of a finite crystal:
///   f_i x = y  <=>  e_i y = x;
///   wt(e_i x) = wt(x) + alpha_i, wt(f_i x) = wt(x) - alpha_i, with
///     alpha_i = +1 at coordinate i and -1 at coordinate i+1;
///   phi_i = eps_i + (wt_i - wt_{i+1}).
/// Returns human-readable violations (empty when all hold).
template <class V>
std::vector<std::string> check_crystal_axioms(const std::vector<V>& vertices, int rank, const CrystalOp<V>& e,
                                              const CrystalOp<V>& f,
                                              const std::function<std::vector<int>(const V&)>& weight,
                                              const std::function<std::string(const V&)>& show) {
  std::vector<std::string> violations;
  auto wt_at = [](const std::vector<int>& w, int k) { return k - 1 < static_cast<int>(w.size()) ? w[k - 1] : 0; };
  for (const V& x : vertices) {
    const auto wx = weight(x);
    for (int i = 1; i <= rank; ++i) {
      if (auto y = f(x, i)) {
        auto back = e(*y, i);
        if (!back || !(*back == x)) violations.push_back("e_" + std::to_string(i) + "(f_" + std::to_string(i) + "(" + show(x) + ")) != x");
        auto wy = weight(*y);
        if (wt_at(wy, i) != wt_at(wx, i) - 1 || wt_at(wy, i + 1) != wt_at(wx, i + 1) + 1) {
          violations.push_back("weight of f_" + std::to_string(i) + "(" + show(x) + ") is not wt - alpha_i");
        }
      }
      if (auto y = e(x, i)) {
        auto back = f(*y, i);
        if (!back || !(*back == x)) violations.push_back("f_" + std::to_string(i) + "(e_" + std::to_string(i) + "(" + show(x) + ")) != x");
        auto wy = weight(*y);
        if (wt_at(wy, i) != wt_at(wx, i) + 1 || wt_at(wy, i + 1) != wt_at(wx, i + 1) - 1) {
          violations.push_back("weight of e_" + std::to_string(i) + "(" + show(x) + ") is not wt + alpha_i");
        }
      }
      const int eps = crystal_epsilon(x, i, e);
      const int phi = crystal_phi(x, i, f);
      if (phi != eps + wt_at(wx, i) - wt_at(wx, i + 1)) {
        violations.push_back("phi_" + std::to_string(i) + " != eps_" + std::to_string(i) + " + <alpha_i^vee, wt> at " + show(x));
      }
    }
  }
  return violations;
}

/// Stembridge's local axioms for simply-laced crystals (type A Cartan matrix:
/// a_ij = -1 when |i-j| = 1, 0 otherwise), in their raising and lowering forms.
template <class V>
std::vector<std::string> check_stembridge_axioms(const std::vector<V>& vertices, int rank, const CrystalOp<V>& e,
                                                 const CrystalOp<V>& f,
                                                 const std::function<std::string(const V&)>& show) {
  std::vector<std::string> violations;
  auto eps = [&](const V& x, int i) { return crystal_epsilon(x, i, e); };
  auto phi = [&](const V& x, int i) { return crystal_phi(x, i, f); };
  auto apply = [](const CrystalOp<V>& op, std::optional<V> x, std::initializer_list<int> labels) {
    // labels are applied right to left, as in e_i e_j x
    std::vector<int> order(labels);
    for (auto it = order.rbegin(); it != order.rend() && x; ++it) x = op(*x, *it);
    return x;
  };
  auto tag = [](const std::string& axiom, int i, int j, const std::string& at) {
    return axiom + " fails for (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") at " + at;
  };
  for (const V& x : vertices) {
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        if (i == j) continue;
        const int a_ij = (i - j == 1 || j - i == 1) ? -1 : 0;
        if (auto ex = e(x, i)) {
          const int d_eps = eps(*ex, j) - eps(x, j);
          const int d_phi = phi(*ex, j) - phi(x, j);
          // P2: wt(e_i x) - wt(x) = alpha_i, seen through alpha_j^vee.
          if (d_phi - d_eps != a_ij) violations.push_back(tag("P2", i, j, show(x)));
          // P3: eps_j can only grow and phi_j only shrink under e_i.
          if (d_eps < 0 || d_phi > 0) violations.push_back(tag("P3", i, j, show(x)));
        }
        if (auto fx = f(x, i)) {
          const int d_eps = eps(x, j) - eps(*fx, j);
          const int d_phi = phi(x, j) - phi(*fx, j);
          if (d_phi - d_eps != a_ij) violations.push_back(tag("P2'", i, j, show(x)));
          // P3': under f_i, eps_j can only shrink and phi_j only grow.
          if (d_eps < 0 || d_phi > 0) violations.push_back(tag("P3'", i, j, show(x)));
        }
        if (i > j) continue;
        const auto ei = e(x, i), ej = e(x, j);
        if (ei && ej) {
          const int di = eps(*ei, j) - eps(x, j);
          const int dj = eps(*ej, i) - eps(x, i);
          if (di == 0) {
            // P4: e_i e_j x = e_j e_i x =: y and phi_i is unchanged along y -> e_i x.
            const auto y1 = apply(e, x, {i, j});
            const auto y2 = apply(e, x, {j, i});
            if (!y1 || !y2 || !(*y1 == *y2) || phi(*y1, i) != phi(*ei, i)) {
              violations.push_back(tag("P4", i, j, show(x)));
            }
          }
          if (di == 1 && dj == 1) {
            // P5: e_i e_j^2 e_i x = e_j e_i^2 e_j x.
            const auto y1 = apply(e, x, {i, j, j, i});
            const auto y2 = apply(e, x, {j, i, i, j});
            if (!y1 || !y2 || !(*y1 == *y2)) violations.push_back(tag("P5", i, j, show(x)));
          }
        }
        const auto fi = f(x, i), fj = f(x, j);
        if (fi && fj) {
          const int di = phi(*fi, j) - phi(x, j);
          const int dj = phi(*fj, i) - phi(x, i);
          if (di == 0) {
            const auto y1 = apply(f, x, {i, j});
            const auto y2 = apply(f, x, {j, i});
            if (!y1 || !y2 || !(*y1 == *y2) || eps(*y1, i) != eps(*fi, i)) {
              violations.push_back(tag("P4'", i, j, show(x)));
            }
          }
          if (di == 1 && dj == 1) {
            const auto y1 = apply(f, x, {i, j, j, i});
            const auto y2 = apply(f, x, {j, i, i, j});
            if (!y1 || !y2 || !(*y1 == *y2)) violations.push_back(tag("P5'", i, j, show(x)));
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace redword
