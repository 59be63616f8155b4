#include "redword/symfunc.hpp"

#include <stdexcept>

namespace redword {

std::string basis_name(Basis b) { return b == Basis::Monomial ? "monomial" : "schur"; }
char basis_symbol(Basis b) { return b == Basis::Monomial ? 'm' : 's'; }

Integer SymFuncExpansion::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymFuncExpansion::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFuncExpansion& SymFuncExpansion::operator+=(const SymFuncExpansion& other) {
  if (other.basis_ != basis_) throw std::invalid_argument("adding expansions in different bases");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

std::string to_string(const SymFuncExpansion& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    Integer magnitude = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      magnitude = -c;
    } else if (!first) {
      out += " + ";
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += basis_symbol(f.basis());
    out += format_partition(p);
    first = false;
  }
  return out;
}

}  // namespace redword
