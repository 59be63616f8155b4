#pragma once

#include "redword/partition.hpp"
#include "redword/rational.hpp"

#include <map>
#include <string>

namespace redword {

enum class Basis { Monomial, Schur };

std::string basis_name(Basis b);  // "monomial" / "schur"
char basis_symbol(Basis b);       // 'm' / 's'

/// Finite linear combination of monomial or Schur functions with integer
/// coefficients. Zero coefficients are never stored.
class SymFuncExpansion {
 public:
  explicit SymFuncExpansion(Basis basis = Basis::Monomial) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const std::map<Partition, Integer>& terms() const { return terms_; }
  Integer coefficient(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& p, const Integer& c);
  SymFuncExpansion& operator+=(const SymFuncExpansion& other);

  bool operator==(const SymFuncExpansion&) const = default;

 private:
  Basis basis_;
  std::map<Partition, Integer> terms_;
};

/// Rendering: "2*m[1,1,1] + m[2,1]", "s[]" for the constant, "0" when empty.
std::string to_string(const SymFuncExpansion& f);

}  // namespace redword
