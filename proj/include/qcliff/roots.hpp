#pragma once

// Root finding for the polynomials that occur in the quadratic-form code.
// Supported: degree <= 2 (quadratic formula, adjoining a square root),
// factors shared with cyclotomic polynomials Phi_d(x) or with the minimal
// polynomials of zeta_d + zeta_d^{-1}, even polynomials (via x^2), and rational
// roots. Anything else raises UnsupportedSplitting; roots of unity outside the
// current cyclotomic base raise ConductorRequest.

#include "qcliff/poly.hpp"

#include <vector>

namespace qcliff {

struct RootSet {
  TowerPtr tower;                   // holds every root
  std::vector<FieldElement> roots;  // distinct roots, deterministic order
};

RootSet find_roots(const Poly& p, const TowerPtr& tower);

/// Minimal polynomial of zeta_d + zeta_d^{-1} over Q (d >= 3).
const Poly& real_cyclotomic_polynomial(unsigned d);

struct ResidueResult {
  Poly y;
  TowerPtr tower;
};
/// y with y^2 = R mod S and deg y < deg S, for square-free S. At each root z
/// of S the branch sqrt(R(z)) with positive leading tower coordinate is used.
ResidueResult quadratic_residue_mod(const Poly& R, const Poly& S, const TowerPtr& tower);

}  // namespace qcliff
