#pragma once

// Rational functions in one variable over the tower field, kept in the
// canonical form num/den with gcd(num, den) = 1 and den monic (zero is 0/1).

#include "qcliff/poly.hpp"

#include <optional>
#include <string>

namespace qcliff {

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num);  // NOLINT
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(FieldElement c) : RatFunc(Poly(std::move(c))) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  /// Laurent monomial c * x^k.
  static RatFunc laurent(const FieldElement& c, long k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  FieldElement constant_value() const;  // requires is_constant()
  bool is_polynomial() const { return den_.is_constant(); }
  /// True if the denominator is a power of the variable.
  bool is_laurent() const;
  TowerPtr tower() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  /// Value at a point; throws std::domain_error at a pole.
  FieldElement eval(const FieldElement& x) const;
  /// this(g) for a rational function g.
  RatFunc compose(const RatFunc& g) const;
  RatFunc map(const TowerEmbedding& e) const;

  /// Human-readable form; Laurent values print as sums of powers of var.
  std::string str(const std::string& var = "q") const;

 private:
  void normalize();
  Poly num_, den_;
};

/// Square in the rational function field over an algebraically closed
/// constant field: every non-constant square-free part has even multiplicity.
bool ratfunc_is_square_over_closure(const RatFunc& f);

struct RatFuncSqrt {
  RatFunc root;
  TowerPtr tower;  // tower after possibly adjoining the constant's square root
};
/// Square root of f, adjoining a constant square root to the tower when
/// needed; nullopt when f is not a square over the closure.
std::optional<RatFuncSqrt> ratfunc_sqrt(const RatFunc& f, const TowerPtr& tower);

}  // namespace qcliff
