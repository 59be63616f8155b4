#pragma once

// The invariant suite behind `redword verify`: every identity the library
// claims, checked exhaustively on small groups.

#include "redword/coxeter.hpp"
#include "redword/edelman_greene.hpp"
#include "redword/markov.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace redword {

/// "coxeter", "crystal", "tableaux", "eg", "stanley", "markov".
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") over S_2 .. S_max_n, plus hypercube and dihedral
/// groups for the Markov suite. Throws std::invalid_argument on an unknown name.
std::vector<VerificationReport> run_suite(const std::string& suite, int max_n);

/// `count` elements drawn uniformly (with replacement) from the group.
std::vector<Permutation> random_elements(const CoxeterSystem& system, int count, std::uint64_t seed);

/// Measure with full support: integer weights 1..9 drawn with the seed, normalized.
ProbabilityMeasure random_measure(int k, std::uint64_t seed);

/// Folds `part` into `total`: cases add up, violations are kept.
void absorb(VerificationReport& total, const VerificationReport& part);

}  // namespace redword
