#pragma once

// Replay of the worked example λ = (4,2,1) in the variable t = q^2 + q^-2:
// Λ_1 = t(t^2 - 2), Λ_2 = t, Λ_3 = 1.

#include "qcliff/witt.hpp"

#include <string>
#include <vector>

namespace qcliff {

struct ExampleCoefficient {
  std::size_t generator = 0;  // 1-based index of t̄_i
  std::string basis;          // "w", "w*" or "z"
  RatFunc printed, exact;
  bool equal = false;
  std::string ratio;  // printed / exact when both are nonzero
};

struct WorkedExampleReport {
  QuadSpace space;

  // printed data
  Vec w, wstar, z;
  RatFunc c;           // scalar in w* = c(X, Y, -Z)
  Poly c1;             // printed residue
  RatFunc zz_printed;  // -1/4 t^2 (t^2 - 2)

  bool w_solves = false;           // Λ1 X^2 + Λ2 Y^2 + Λ3 Z^2 = 0
  bool c1_residue = false;         // C1^2 = t mod t^2 - 2
  bool printed_gram = false;       // identities for the printed w, w*, z
  bool printed_zz = false;         // β(z, z) = -1/4 t^2 (t^2 - 2)
  bool constructed_gram = false;   // witt_check on the solver's decomposition
  bool constructed_module = false; // 2|2 and verify_module
  bool printed_module = false;     // theta on the printed decomposition verifies

  Poly c1_solver;  // quadratic_residue_mod(t, t^2 - 2)
  bool c1_solver_matches = false;
  WittDecomposition constructed, printed;
  ModuleMatrices module, module_from_printed;
  std::vector<ExampleCoefficient> coefficients;  // t̄_i in the printed basis
  std::vector<std::string> deviations;

  bool pass() const {
    return w_solves && c1_residue && printed_gram && printed_zz && constructed_gram && constructed_module;
  }
};

WorkedExampleReport worked_example();

}  // namespace qcliff
