#pragma once

#include "redword/coxeter.hpp"
#include "redword/factorization.hpp"
#include "redword/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redword {

struct RowInsertion {
  std::vector<Letter> row;
  std::optional<Letter> bumped;
  bool special = false;  // a and a+1 both present: row kept, a+1 bumped
};

/// One Edelman-Greene row insertion of `a` into a strictly increasing row.
/// With b the smallest letter larger than a: no b appends a; b = a+1 with a
/// already present leaves the row alone and bumps a+1; otherwise b is
/// replaced by a and bumped.
RowInsertion eg_insert_letter(std::vector<Letter> row, Letter a);

struct EGPair {
  Tableau P;  // insertion tableau, letters of the word
  Tableau Q;  // recording tableau
};

/// Reverses every factor of f to an increasing word and inserts factors
/// w^1, w^2, ..., w^l in turn; cells created while inserting factor k hold k in Q.
EGPair eg_insert(const DecreasingFactorization& f);

/// Plain EG insertion of a word, letters left to right; Q records the step
/// number, so it is standard.
EGPair eg_insert_word(const Word& w);

/// Column reading word of P^t.
Word p_transpose_reading_word(const Tableau& P);

// --- Coxeter-Knuth relations ------------------------------------------------

enum class CKRelation { Braid, BacBca, CabAcb };

struct CKNeighbor {
  Word word;
  std::size_t position;  // index of the first letter of the rewritten window
  CKRelation relation;
  bool forward;  // true when the window matched the left-hand side
};

/// Every word obtained from w by one relation on three consecutive letters:
///   (a+1) a (a+1) ~ a (a+1) a,   b a c ~ b c a,   c a b ~ a c b   (a < b < c).
std::vector<CKNeighbor> ck_relations(const Word& w);
std::vector<Word> ck_neighbors(const Word& w);

struct CKGraph {
  std::vector<Word> vertices;  // Red(w), sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // unordered, first < second
  std::vector<CKRelation> kinds;
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
};

CKGraph ck_graph(const CoxeterSystem& system, const Permutation& w);

/// Connected components of the Coxeter-Knuth graph, each sorted, ordered by first word.
std::vector<std::vector<Word>> ck_components(const CoxeterSystem& system, const Permutation& w);

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> violations = {};

  void fail(std::string message) {
    passed = false;
    if (violations.size() < 20) violations.push_back(std::move(message));
  }
};

/// Over all pairs of reduced words of w: equal EG insertion tableaux iff
/// Coxeter-Knuth equivalent.
VerificationReport same_p_tableau_iff_ck_equivalent(const CoxeterSystem& system, const Permutation& w);

/// Over every factorization of w into `factors` pieces and every i: the Q
/// tableau of e_i b (resp. f_i b) is e_i (resp. f_i) of the Q tableau of b,
/// with undefined matching undefined. factors = 0 means l(w).
VerificationReport intertwining_check(const CoxeterSystem& system, const Permutation& w, int factors = 0);

/// Components of B(w) with l(w) factors against Coxeter-Knuth classes: the
/// words of each crystal component lie in one class, P is constant on it,
/// and distinct components meet distinct classes.
VerificationReport ck_crystal_components_check(const CoxeterSystem& system, const Permutation& w);

/// For each Coxeter-Knuth move taking the left-hand side window of a reduced
/// word to the right-hand side, with the words viewed as singleton
/// factorizations: f_i f_{i+1} e_i e_{i+1} maps one to the other, where the
/// window starts at 0-based position p and i = l(w) - p - 2.
VerificationReport ck_edge_crystal_check(const CoxeterSystem& system, const Permutation& w);

}  // namespace redword
