#pragma once

#include "redword/coxeter.hpp"
#include "redword/edelman_greene.hpp"
#include "redword/symfunc.hpp"

#include <utility>

namespace redword {

struct MonomialExpansion {
  SymFuncExpansion expansion{Basis::Monomial};
  /// Set when fewer variables than l(w) were used, so weights with more
  /// nonzero parts than variables were dropped.
  bool truncated = false;
};

/// F_w in `nvars` variables: for every partition mu, the number of decreasing
/// factorizations with `nvars` factors of weight exactly mu. Symmetry makes
/// this the coefficient of m_mu. nvars = 0 means l(w) (at least 1).
MonomialExpansion stanley_monomial(const CoxeterSystem& system, const Permutation& w, int nvars = 0);

/// a_{w,lambda} = number of highest weight factorizations of weight lambda.
SymFuncExpansion schur_expansion(const CoxeterSystem& system, const Permutation& w);

/// a_{w,lambda} = number of semistandard tableaux of shape lambda^t whose
/// column reading word is a reduced word of w.
SymFuncExpansion schur_expansion_via_eg(const CoxeterSystem& system, const Permutation& w);

/// Solves F_w = sum a_lambda s_lambda against the unitriangular Kostka matrix
/// in nvars >= l(w) variables. Throws std::logic_error if the monomial data
/// is not an integer combination of Schur polynomials.
SymFuncExpansion schur_expansion_via_linear_algebra(const CoxeterSystem& system, const Permutation& w,
                                                    int nvars = 0);

/// omega: s_lambda -> s_{lambda^t}.
SymFuncExpansion omega(const SymFuncExpansion& schur);

/// s_1^perp in the Schur basis: s_lambda -> sum of s_mu over mu = lambda minus one corner.
SymFuncExpansion skew_by_s1(const SymFuncExpansion& schur);

/// Which element the omega image is compared against.
enum class OmegaPartner {
  Conjugate,  // F_{w0 w w0}
  Inverse,    // F_{w^{-1}}
  LeftLongest // F_{w0 w}, degree l(w0) - l(w)
};

Permutation omega_partner(const CoxeterSystem& system, const Permutation& w, OmegaPartner partner);

VerificationReport omega_duality_check(const CoxeterSystem& system, const Permutation& w,
                                       OmegaPartner partner = OmegaPartner::Conjugate);

/// s_1^perp F_w = sum over lower left-weak-order covers v of F_v.
VerificationReport skew_by_s1_check(const CoxeterSystem& system, const Permutation& w);

/// Dominance-minimal and -maximal partitions in the Schur support of F_w.
/// Throws if the support has no unique minimum or maximum.
std::pair<Partition, Partition> support_interval(const CoxeterSystem& system, const Permutation& w);

/// Extremal coefficients equal one and every support partition lies in the
/// dominance interval between them.
VerificationReport support_interval_check(const CoxeterSystem& system, const Permutation& w);

/// Coefficient of m_{1^{l(w)}} equals |Red(w)|.
VerificationReport square_free_check(const CoxeterSystem& system, const Permutation& w);

/// The three Schur expansions agree and are nonnegative.
VerificationReport three_way_schur_check(const CoxeterSystem& system, const Permutation& w);

}  // namespace redword
