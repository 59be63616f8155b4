#pragma once

#include "redword/partition.hpp"
#include "redword/rational.hpp"
#include "redword/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redword {

/// Young tableau in English convention: rows()[0] is the longest row.
class Tableau {
 public:
  Tableau() = default;
  /// Throws unless the row lengths weakly decrease.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int at(int row, int col) const { return rows_[row][col]; }

  bool is_semistandard() const;
  bool is_standard() const;
  bool is_row_strict() const;  // strictly increasing rows, strictly increasing columns

  Tableau transpose() const;

  /// Row reading word: bottom row first, each row left to right.
  std::vector<int> row_reading_word() const;
  /// Column reading word: columns left to right, each read from the bottom
  /// cell up to the first row.
  std::vector<int> column_reading_word() const;

  /// Multiplicities of 1..max_entry.
  std::vector<int> content(int max_entry) const;

  /// Appends value at the end of the given row (a new row if row == number of rows).
  void append(int row, int value);
  std::vector<int>& row(int r) { return rows_[r]; }

  auto operator<=>(const Tableau&) const = default;
  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

std::string format_tableau(const Tableau& t);  // "[[1,1],[2]]"
Tableau parse_tableau(const std::string& text);

/// Tableau of shape lambda whose row r holds the letter r+1.
Tableau yamanouchi_tableau(const Partition& lambda);

/// All semistandard tableaux of shape lambda with entries in 1..max_entry,
/// sorted.
std::vector<Tableau> generate_ssyt(const Partition& lambda, int max_entry);

/// All standard tableaux of shape lambda, by exhaustive filling.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Signature rule on the row reading word: each i+1 is bracketed with a later
/// unbracketed i. f_i turns the rightmost unbracketed i into i+1 and e_i turns
/// the leftmost unbracketed i+1 into i.
std::optional<Tableau> tableau_crystal_f(const Tableau& t, int i);
std::optional<Tableau> tableau_crystal_e(const Tableau& t, int i);

/// (number of entries equal to 1, ..., number equal to n).
std::vector<int> tableau_weight(const Tableau& t, int n);

/// Monomial expansion of s_lambda(x_1..x_nvars) from the SSYT weight
/// generating function, collected on partition-shaped exponents.
SymFuncExpansion schur_polynomial(const Partition& lambda, int nvars);

/// Number of standard tableaux of shape lambda via the hook-length formula.
Integer hook_length_count(const Partition& lambda);

/// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
/// content mu, counted by peeling horizontal strips.
Integer kostka_number(const Partition& lambda, const Partition& mu);

}  // namespace redword
