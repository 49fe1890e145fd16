#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hessenpave/chevalley.hpp"

namespace hessenpave {

struct LemmaCheck {
  std::string name;
  bool passed = true;
  /// Key/value description of the first failure, in insertion order.
  std::optional<std::vector<std::pair<std::string, std::string>>> counterexample;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  std::uint64_t seed = 0;
  int trials = 0;

  bool all_passed() const;
  const LemmaCheck& check(const std::string& name) const;
};

/// Runs the structural checks on the realization:
///   row_structure        rows abelian, or Heisenberg with centre g_gamma (type C)
///   row_count            the rows partition Phi+
///   near_linearity       rho_i Ad(exp X)(N) against the three case formulas
///   psi_invariance       psi_i unchanged by Ad(exp X) for X in a lower row
///   type_d_coefficients  coefficient formulas for X in row i+1 (type D)
///   containment          first nonzero entries of psi_i over every nonempty cell
///   type_d_block         the 3x3 block of the paired type-D stage
/// Checks that do not apply to the type pass with detail "vacuous".
/// Each (check, trial) pair draws from its own stream seeded by (seed, check, trial).
LemmaReport verify_lemmata(const ChevalleyRealization& real, int trials, std::uint64_t seed);

}  // namespace hessenpave
