#include "redword/stanley.hpp"

#include "redword/factorization.hpp"
#include "redword/tableau.hpp"

#include <stdexcept>

namespace redword {

namespace {

std::vector<int> padded(const Partition& p, int length) {
  std::vector<int> out(length, 0);
  for (int k = 0; k < p.length(); ++k) out[k] = p[k];
  return out;
}

}  // namespace

MonomialExpansion stanley_monomial(const CoxeterSystem& system, const Permutation& w, int nvars) {
  if (nvars == 0) nvars = default_factor_count(system, w);
  const int l = system.length(w);
  MonomialExpansion out;
  out.truncated = nvars < l;
  for (const Partition& mu : partitions_of(l, nvars)) {
    const auto count = decreasing_factorizations(system, w, nvars, padded(mu, nvars)).size();
    out.expansion.add(mu, Integer(count));
  }
  return out;
}

SymFuncExpansion schur_expansion(const CoxeterSystem& system, const Permutation& w) {
  SymFuncExpansion out(Basis::Schur);
  for (const auto& hw : highest_weights(system, w)) out.add(Partition(hw.weight), 1);
  return out;
}

SymFuncExpansion schur_expansion_via_eg(const CoxeterSystem& system, const Permutation& w) {
  if (system.kind() != CoxeterKind::Symmetric) {
    throw std::invalid_argument("Schur expansions are defined for symmetric groups");
  }
  const int l = system.length(w);
  SymFuncExpansion out(Basis::Schur);
  for (const Partition& lambda : partitions_of(l)) {
    Integer count = 0;
    for (const Tableau& t : generate_ssyt(lambda.transpose(), system.rank())) {
      const Word reading = t.column_reading_word();
      if (system.evaluate(reading) == w) ++count;  // length l(w) words evaluating to w are reduced
    }
    out.add(lambda, count);
  }
  return out;
}

SymFuncExpansion schur_expansion_via_linear_algebra(const CoxeterSystem& system, const Permutation& w, int nvars) {
  const int l = system.length(w);
  if (nvars == 0) nvars = default_factor_count(system, w);
  if (nvars < l) throw std::invalid_argument("the linear solve needs at least l(w) variables");
  const SymFuncExpansion monomial = stanley_monomial(system, w, nvars).expansion;

  // Partitions largest first in lexicographic order, a linear extension of
  // dominance; K_{nu,lambda} != 0 forces nu >= lambda, so each unknown is
  // determined by the ones already solved.
  const std::vector<Partition> order = partitions_of(l, nvars);
  SymFuncExpansion out(Basis::Schur);
  for (std::size_t k = 0; k < order.size(); ++k) {
    Integer value = monomial.coefficient(order[k]);
    for (std::size_t j = 0; j < k; ++j) {
      const Integer a = out.coefficient(order[j]);
      if (a != 0) value -= a * kostka_number(order[j], order[k]);
    }
    if (kostka_number(order[k], order[k]) != 1) {
      throw std::logic_error("Kostka matrix is not unitriangular at " + format_partition(order[k]));
    }
    out.add(order[k], value);
  }
  return out;
}

SymFuncExpansion omega(const SymFuncExpansion& schur) {
  if (schur.basis() != Basis::Schur) throw std::invalid_argument("omega is applied in the Schur basis");
  SymFuncExpansion out(Basis::Schur);
  for (const auto& [p, c] : schur.terms()) out.add(p.transpose(), c);
  return out;
}

SymFuncExpansion skew_by_s1(const SymFuncExpansion& schur) {
  if (schur.basis() != Basis::Schur) throw std::invalid_argument("s_1^perp is applied in the Schur basis");
  SymFuncExpansion out(Basis::Schur);
  for (const auto& [p, c] : schur.terms()) {
    for (int r = 0; r < p.length(); ++r) {
      if (p[r] > p[r + 1]) {
        std::vector<int> parts = p.parts();
        --parts[r];
        out.add(Partition(parts), c);
      }
    }
  }
  return out;
}

Permutation omega_partner(const CoxeterSystem& system, const Permutation& w, OmegaPartner partner) {
  const Permutation& w0 = system.longest();
  switch (partner) {
    case OmegaPartner::Conjugate: return system.multiply(system.multiply(w0, w), w0);
    case OmegaPartner::Inverse: return w.inverse();
    case OmegaPartner::LeftLongest: return system.multiply(w0, w);
  }
  return w;
}

VerificationReport omega_duality_check(const CoxeterSystem& system, const Permutation& w, OmegaPartner partner) {
  VerificationReport report{"omega duality"};
  report.cases = 1;
  const Permutation v = omega_partner(system, w, partner);
  const auto lhs = omega(schur_expansion(system, w));
  const auto rhs = schur_expansion(system, v);
  if (lhs != rhs) {
    report.fail("w = " + system.describe(w) + ": omega(F_w) = " + to_string(lhs) + " but F_" + system.describe(v) +
                " = " + to_string(rhs));
  }
  return report;
}

VerificationReport skew_by_s1_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"s_1^perp F_w = sum of F_v over covers"};
  report.cases = 1;
  const auto lhs = skew_by_s1(schur_expansion(system, w));
  SymFuncExpansion rhs(Basis::Schur);
  for (const Permutation& v : system.weak_order_covers(w)) rhs += schur_expansion(system, v);
  if (lhs != rhs) {
    report.fail("w = " + system.describe(w) + ": s_1^perp F_w = " + to_string(lhs) + ", sum over covers = " +
                to_string(rhs));
  }
  return report;
}

std::pair<Partition, Partition> support_interval(const CoxeterSystem& system, const Permutation& w) {
  const auto f = schur_expansion(system, w);
  std::vector<Partition> support;
  for (const auto& [p, c] : f.terms()) support.push_back(p);
  auto find_extreme = [&](bool minimum) -> Partition {
    for (const auto& candidate : support) {
      bool extreme = true;
      for (const auto& other : support) {
        if (!(minimum ? dominance_leq(candidate, other) : dominance_leq(other, candidate))) {
          extreme = false;
          break;
        }
      }
      if (extreme) return candidate;
    }
    throw std::logic_error("Schur support of F_" + system.describe(w) + " has no unique dominance " +
                           (minimum ? "minimum" : "maximum"));
  };
  return {find_extreme(true), find_extreme(false)};
}

VerificationReport support_interval_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"extremal Schur coefficients are one"};
  report.cases = 1;
  const auto f = schur_expansion(system, w);
  try {
    const auto [low, high] = support_interval(system, w);
    if (f.coefficient(low) != 1 || f.coefficient(high) != 1) {
      report.fail("w = " + system.describe(w) + ": extremal coefficients " + f.coefficient(low).str() + ", " +
                  f.coefficient(high).str());
    }
  } catch (const std::logic_error& e) {
    report.fail(e.what());
  }
  return report;
}

VerificationReport square_free_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"square-free coefficient equals |Red(w)|"};
  report.cases = 1;
  const int l = system.length(w);
  const auto f = stanley_monomial(system, w, std::max(1, l)).expansion;
  const Integer square_free = f.coefficient(Partition(std::vector<int>(l, 1)));
  const Integer words = system.count_reduced_words(w);
  if (square_free != words) {
    report.fail("w = " + system.describe(w) + ": coefficient " + square_free.str() + " vs |Red(w)| = " + words.str());
  }
  return report;
}

VerificationReport three_way_schur_check(const CoxeterSystem& system, const Permutation& w) {
  VerificationReport report{"three-way Schur expansion agreement"};
  report.cases = 1;
  const auto by_crystal = schur_expansion(system, w);
  const auto by_eg = schur_expansion_via_eg(system, w);
  const auto by_solve = schur_expansion_via_linear_algebra(system, w);
  if (by_crystal != by_eg || by_crystal != by_solve) {
    report.fail("w = " + system.describe(w) + ": crystal " + to_string(by_crystal) + ", EG " + to_string(by_eg) +
                ", linear solve " + to_string(by_solve));
  }
  for (const auto& [p, c] : by_solve.terms()) {
    if (c < 0) report.fail("w = " + system.describe(w) + ": negative coefficient at " + format_partition(p));
  }
  return report;
}

}  // namespace redword
