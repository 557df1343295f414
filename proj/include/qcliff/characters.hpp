#pragma once

// Weight combinatorics and the generic character formula
//   ch V(λ) = (dim v_λ / D) Σ_{w ∈ S_n} sgn(w) w(e^{λ+ρ0} Π_{typical α} (1 + e^{-α})).
// Exponent vectors are stored doubled so that ρ0 stays integral.

#include "qcliff/clifford.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcliff {

/// Weight outside the domain of an operation (exit code 1 in the CLI).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The alternating sum is not divisible by the Weyl denominator.
class NonExactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::vector<long>;  // doubled coordinates

class CharacterPoly {
 public:
  CharacterPoly() = default;
  explicit CharacterPoly(std::size_t n) : n_(n) {}
  static CharacterPoly monomial(const Exponent& doubled, const mpz_class& c = 1);

  std::size_t n() const { return n_; }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e^μ for an undoubled integer exponent μ.
  mpz_class coeff(const std::vector<long>& mu) const;
  mpz_class coeff_doubled(const Exponent& e) const;

  CharacterPoly& add(const Exponent& e, const mpz_class& c);
  friend CharacterPoly operator+(const CharacterPoly& a, const CharacterPoly& b);
  friend CharacterPoly operator-(const CharacterPoly& a, const CharacterPoly& b);
  friend CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b);
  friend CharacterPoly operator*(const mpz_class& c, const CharacterPoly& a);
  friend bool operator==(const CharacterPoly& a, const CharacterPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Coordinates permuted: exponent e maps to e' with e'[perm[i]] = e[i].
  CharacterPoly permuted(const std::vector<std::size_t>& perm) const;
  bool is_symmetric() const;
  bool nonnegative() const;
  bool integral_exponents() const;
  /// Value at x_1 = ... = x_n = 1.
  mpz_class total() const;

  /// "2·x1 + 2·x2"; half-integer exponents print as fractions.
  std::string str() const;
  /// Sum of monomial symmetric functions, e.g. "2·m(1,0)"; requires symmetry.
  std::string str_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::map<Exponent, mpz_class> terms_;
};

/// Exact quotient a / b; throws NonExactDivision when b does not divide a.
CharacterPoly exact_divide(const CharacterPoly& a, const CharacterPoly& b);

/// ρ0 = ((n-1)/2, (n-3)/2, ..., -(n-1)/2), doubled.
Exponent rho0(std::size_t n);

/// Pairs (i, j), i < j (0-based), with λ_i + λ_j != 0.
std::vector<std::pair<std::size_t, std::size_t>> typical_roots(const Weight& w);

/// Σ_{w ∈ S_n} sgn(w) e^{w ρ0}.
CharacterPoly weyl_denominator(std::size_t n);
/// Π_{i<j} (x_i^{1/2} x_j^{-1/2} - x_i^{-1/2} x_j^{1/2}), expanded.
CharacterPoly weyl_denominator_product(std::size_t n);

/// 2^{⌊(s-1)/2⌋+1} for s = number of nonzero entries >= 1, and 1 for s = 0.
mpz_class dim_v(const Weight& w);

/// Requires λ q-dominant and in P_{>=0} unless check_domain is false.
CharacterPoly sergeev_character(const Weight& w, bool check_domain = true);

/// sergeev_character times 2 when |λ| is even, nonzero, with non-square discriminant.
CharacterPoly ch_vq(const Weight& w);

struct DeltaSymbol {
  std::map<long, long> mult;  // m > 0 -> signed multiplicity of δ_m
  std::string str() const;
  friend bool operator==(const DeltaSymbol& a, const DeltaSymbol& b) { return a.mult == b.mult; }
};
DeltaSymbol delta_symbol(const Weight& w);
bool central_char_equal(const Weight& a, const Weight& b);

struct Dominance {
  bool gl_dominant, q_dominant, in_p_geq0;
};
Dominance dominance(const Weight& w);

}  // namespace qcliff
