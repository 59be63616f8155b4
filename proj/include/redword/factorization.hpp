#pragma once

#include "redword/coxeter.hpp"
#include "redword/crystal_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redword {

/// A decreasing factorization w = w^l ... w^1 of a permutation into l
/// decreasing elements whose lengths add up to l(w). A decreasing element is
/// determined by its content, so each factor is stored as its letters in
/// strictly decreasing order.
///
/// factors()[0] is w^1, the rightmost factor; display order is w^l first.
class DecreasingFactorization {
 public:
  DecreasingFactorization() = default;
  /// `factors` are given rightmost first. Each factor may be in any order;
  /// it is normalized to decreasing. Throws if a factor repeats a letter or
  /// the concatenation is not reduced in `system`.
  DecreasingFactorization(const CoxeterSystem& system, std::vector<std::vector<Letter>> factors);

  /// Builds from factors listed in display order (w^l first).
  static DecreasingFactorization from_display(const CoxeterSystem& system, std::vector<std::vector<Letter>> factors);

  /// Each letter of a reduced word in its own factor (l = |word|).
  static DecreasingFactorization singletons(const CoxeterSystem& system, const Word& reduced);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  /// Factor w^k, k = 1..l, decreasing letters.
  const std::vector<Letter>& factor(int k) const { return factors_[k - 1]; }
  const std::vector<std::vector<Letter>>& factors() const { return factors_; }
  const Permutation& target() const { return target_; }

  /// (l(w^1), ..., l(w^l)).
  std::vector<int> weight() const;

  /// Concatenation w^l ... w^1.
  Word word() const;

  auto operator<=>(const DecreasingFactorization& other) const { return factors_ <=> other.factors_; }
  bool operator==(const DecreasingFactorization& other) const { return factors_ == other.factors_; }

 private:
  friend class FactorizationCrystalAccess;
  std::vector<std::vector<Letter>> factors_;
  Permutation target_;
};

/// Compact notation "(32)(31)(2)", display order, "()" for an empty factor.
std::string format_factorization(const DecreasingFactorization& f);
/// Tuple notation "(1, s1, s2s1)", leftmost factor first.
std::string format_factorization_tuple(const DecreasingFactorization& f);
/// Parses "(32)(31)(2)", "(3,2)(3,1)(2)" or "(s3s2)(s3s1)(s2)"; "1" or "()" is an empty factor.
DecreasingFactorization parse_factorization(const CoxeterSystem& system, const std::string& text);

/// All decreasing factorizations of w with exactly `factors` factors (S_n
/// only), sorted. When `weight` is given only factorizations of exactly that
/// weight are produced.
std::vector<DecreasingFactorization> decreasing_factorizations(const CoxeterSystem& system, const Permutation& w,
                                                               int factors,
                                                               const std::optional<std::vector<int>>& weight = {});

/// Unpaired letters of the w^{i+1} w^i pairing.
struct Pairing {
  std::vector<Letter> left;   // L_i: unpaired letters of w^{i+1}, ascending
  std::vector<Letter> right;  // R_i: unpaired letters of w^i, ascending
  std::vector<std::pair<Letter, Letter>> pairs;  // (b in w^{i+1}, a in w^i), a > b
};

/// Letters of w^{i+1} are taken in decreasing order; each is paired with the
/// smallest strictly larger letter of w^i not yet paired.
Pairing pairing(const DecreasingFactorization& f, int i);

/// Crystal raising operator; nullopt is the crystal zero.
std::optional<DecreasingFactorization> crystal_e(const DecreasingFactorization& f, int i);
/// Crystal lowering operator; nullopt is the crystal zero.
std::optional<DecreasingFactorization> crystal_f(const DecreasingFactorization& f, int i);

int crystal_epsilon(const DecreasingFactorization& f, int i);
int crystal_phi(const DecreasingFactorization& f, int i);

bool is_highest_weight(const DecreasingFactorization& f);

using FactorizationCrystal = CrystalGraph<DecreasingFactorization>;

/// The crystal B(w) of type A_{l-1} on all decreasing factorizations with l factors.
FactorizationCrystal build_crystal(const CoxeterSystem& system, const Permutation& w, int factors);

struct HighestWeight {
  DecreasingFactorization element;
  std::vector<int> weight;
};

/// Highest weight factorizations among those with partition-shaped weight.
/// With factors = 0 the default l(w) (at least 1) is used.
std::vector<HighestWeight> highest_weights(const CoxeterSystem& system, const Permutation& w, int factors = 0);

/// l(w), or 1 for the identity.
int default_factor_count(const CoxeterSystem& system, const Permutation& w);

CrystalOp<DecreasingFactorization> factorization_e_op();
CrystalOp<DecreasingFactorization> factorization_f_op();

}  // namespace redword
