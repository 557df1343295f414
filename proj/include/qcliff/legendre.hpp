#pragma once

// Nontrivial solutions of A X^2 + B Y^2 + C Z^2 = 0 over K(x), K a tower field.
//
// The equation is first brought to square-free, pairwise coprime polynomial
// coefficients a, b, c. Two methods are implemented.
//
// Lattice: needs only the roots of a, b, c. The congruences Y = r_a Z mod a,
// Z = r_b X mod b, X = r_c Y mod c together with the degree bounds
// deg X <= (deg b + deg c)/2 (and cyclically) cut out a space of dimension
// >= 2 on which Q(X,Y,Z) / abc is a constant quadratic form, and any isotropic
// vector of that form is a solution. Tried first: its towers stay small.
//
// Descent on a' X^2 + b' Y^2 = Z^2 (a' = -ac, b' = -bc): pick C1 with
// C1^2 = b' mod a', write (C1^2 - b') / a' = A1 M^2 and recurse on (A1, b').
// It needs the roots of every intermediate A1, which need not be cyclotomic,
// and adjoins a square root per root; used when the lattice step fails.

#include "qcliff/ratfunc.hpp"

#include <string>

namespace qcliff {

struct LegendreSolution {
  RatFunc X, Y, Z;
  TowerPtr tower;
  std::string method;  // "lattice" or "descent"
};

/// Variable-agnostic solver; the result is verified exactly before returning.
/// Throws UnsupportedSplitting when neither method can split the polynomials involved.
LegendreSolution legendre_solve(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                                const TowerPtr& tower = Tower::base());

/// Same equation with coefficients in q; coefficients that are functions of
/// t = q^2 + q^-2 are solved in t and substituted back.
LegendreSolution legendre_solve_q(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                                  const TowerPtr& tower = Tower::base());

/// Descent only (no fallback); exposed for tests.
LegendreSolution legendre_descent(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                                  const TowerPtr& tower = Tower::base());
/// Lattice method only; exposed for tests.
LegendreSolution legendre_lattice(const RatFunc& A, const RatFunc& B, const RatFunc& C,
                                  const TowerPtr& tower = Tower::base());

bool legendre_check(const RatFunc& A, const RatFunc& B, const RatFunc& C, const RatFunc& X, const RatFunc& Y,
                    const RatFunc& Z);

}  // namespace qcliff
