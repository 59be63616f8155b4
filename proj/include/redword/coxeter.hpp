#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace redword {

/// Generator label; generators of a system are numbered 1..rank.
using Letter = int;

/// A sequence of generator labels, read left to right as a product
/// s_{w[0]} s_{w[1]} ... .
using Word = std::vector<Letter>;

std::string format_word(const Word& w);  // "121", or "1,10,2" when a letter exceeds 9
Word parse_word(const std::string& text);  // accepts "121", "1,2,1", "1 2 1"; "" and "e" are empty

/// A bijection of {1..n} in one-line notation. Composition is as functions:
/// (a*b)(x) = a(b(x)), so right multiplication by a transposition swaps positions.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Swaps the values in positions i and i+1 (right multiplication by s_i in S_n).
  Permutation swap_positions(int i, int j) const;

  int inversions() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::string format_one_line(const Permutation& p);  // "[3,2,1]"

enum class CoxeterKind { Symmetric, Hypercube, Dihedral };

/// A finite Coxeter system realized faithfully inside a symmetric group.
///
///  - Symmetric(n): S_n on n points, s_i = (i i+1), rank n-1.
///  - Hypercube(n): (Z/2Z)^n on 2n points, s_i = (2i-1 2i), rank n.
///  - Dihedral(m): I_2(m) on Z/2m, s_1: x -> -x, s_2: x -> 2-x, rank 2.
///
/// Every group element is carried as a Permutation of the underlying points.
/// Lengths come from inversion counts (S_n), support size (hypercube) or a
/// breadth-first length table (dihedral).
class CoxeterSystem {
 public:
  static CoxeterSystem symmetric(int n);
  static CoxeterSystem hypercube(int n);
  static CoxeterSystem dihedral(int m);

  CoxeterKind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  int rank() const { return rank_; }
  int degree() const { return degree_; }
  std::string name() const;

  std::vector<Letter> generators() const;
  bool is_generator(Letter i) const { return i >= 1 && i <= rank_; }

  Permutation identity() const { return Permutation::identity(degree_); }
  Permutation generator(Letter i) const;
  bool contains(const Permutation& g) const;

  /// Group product; throws std::invalid_argument if either operand lies outside this system.
  Permutation multiply(const Permutation& a, const Permutation& b) const;
  Permutation evaluate(std::span<const Letter> word) const;

  int length(const Permutation& g) const;
  bool is_reduced(std::span<const Letter> word) const;

  /// All reduced words of g in lexicographic order.
  std::vector<Word> reduced_words(const Permutation& g) const;
  std::size_t count_reduced_words(const Permutation& g) const;

  /// D_R(g) = {i : l(g s_i) < l(g)}, ascending.
  std::vector<Letter> right_descents(const Permutation& g) const;
  /// {i : l(s_i g) < l(g)}, ascending.
  std::vector<Letter> left_descents(const Permutation& g) const;

  /// Lower covers in left weak order: all v with g = s_i v and l(g) = l(v) + 1,
  /// listed in increasing order of i.
  std::vector<Permutation> weak_order_covers(const Permutation& g) const;

  /// Longest element of the standard parabolic subgroup generated by J.
  Permutation parabolic_longest(std::span<const Letter> J) const;
  const Permutation& longest() const { return *longest_; }

  /// Exchange move on Red(w0): prepend i and delete the unique letter that keeps
  /// the word reduced. Throws if w is not a reduced word of the longest element.
  Word exchange(Letter i, std::span<const Letter> w) const;

  /// Every element of the group, sorted.
  std::vector<Permutation> elements() const;

  /// One-line notation for S_n, "{1,3}" for the hypercube, an alternating
  /// reduced word for dihedral groups.
  std::string describe(const Permutation& g) const;

  bool operator==(const CoxeterSystem& other) const {
    return kind_ == other.kind_ && parameter_ == other.parameter_;
  }

 private:
  CoxeterSystem(CoxeterKind kind, int parameter);
  void require(const Permutation& g) const;
  Permutation right_multiply(const Permutation& g, Letter i) const;

  CoxeterKind kind_;
  int parameter_;
  int rank_;
  int degree_;
  std::vector<Permutation> generators_;
  // Dihedral lengths; shared so copies of the system stay cheap.
  std::shared_ptr<const std::map<Permutation, int>> length_table_;
  std::shared_ptr<const Permutation> longest_;
};

}  // namespace redword
