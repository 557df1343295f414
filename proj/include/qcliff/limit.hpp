#pragma once

// The q -> 1 degeneration: structure constants of Cliff_q(λ) at q = 1, the
// q-bracket gadget identities and the k̄_i^2 chain.

#include "qcliff/clifford.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcliff {

struct LimitEntry {
  Subset s = 0, t = 0;  // t_S · t_T
  bool pass = false;
  std::string quantum_at_one;  // exact values, recorded for failures
  std::string classical;
};

struct CharacterRatio {
  int clifford_route = 1;  // total dim E^q(λ) / total dim of the classical Clifford module
  int case_route = 1;      // 2 iff |λ| = 2k > 0 with non-square discriminant
  bool consistent() const { return clifford_route == case_route; }
};

struct LimitReport {
  Weight lambda;
  std::vector<LimitEntry> entries;  // all 4^n products of basis monomials
  std::size_t dim_quantum = 0, dim_classical = 0;
  std::optional<CharacterRatio> character_ratio;  // for q-dominant λ in P>=0
  bool all_pass() const;
  std::size_t failures() const;
};

/// n <= 8.
LimitReport limit_structure_constants(const Weight& w);

CharacterRatio character_ratio_check(const Weight& w);

struct GadgetRow {
  long m = 0, n = 0;
  bool shift = false;    // (q^m; n) = q^n (q^m; 0) + (q^n - 1)/(q - 1)
  bool bracket = false;  // [q^m; 0] = q(q-1)/(q^2-1) (1 + q^-m) (q^m; 0)
  bool pass() const { return shift && bracket; }
};
/// All m, n in [-range, range].
std::vector<GadgetRow> gadget_identity_suite(long range);

struct KbarRow {
  long m = 0;
  bool pass = false;
  std::string value;  // Λ_m
};
/// Λ_m = [q^{2m}; 0]_{q^2} = q^2 (q^2-1)/(q^4-1) (1 + q^{-2m}) (q^{2m}; 0)_q / (q+1), and its value at q = 1 is m.
KbarRow kbar_square_chain(long m);

}  // namespace qcliff
