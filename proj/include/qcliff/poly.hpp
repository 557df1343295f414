#pragma once

// Univariate polynomials over the tower field. Coefficients are stored low
// degree first with no trailing zeros; the zero polynomial is the empty vector.

#include "qcliff/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcliff {

class Poly {
 public:
  Poly() = default;
  Poly(FieldElement c);  // NOLINT: constants promote implicitly
  Poly(long c) : Poly(FieldElement(c)) {}  // NOLINT
  explicit Poly(std::vector<FieldElement> coeffs);

  static Poly x() { return monomial(FieldElement(1), 1); }
  static Poly monomial(const FieldElement& c, std::size_t deg);
  /// Polynomial with rational coefficients, low degree first.
  static Poly from_rationals(const std::vector<mpq_class>& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(std::size_t k) const;
  FieldElement lead() const;
  /// Smallest tower holding every coefficient.
  TowerPtr tower() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElement& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
  friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly monic() const;
  Poly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  /// this(g(x))
  Poly compose(const Poly& g) const;
  /// Multiplies by x^k (k >= 0) or drops the k lowest coefficients (k < 0, which must be zero).
  Poly shift(long k) const;
  /// Number of leading (lowest-degree) zero coefficients.
  std::size_t low_order() const;
  /// Coefficients lifted into one common tower.
  Poly lifted(const TowerPtr& t) const;
  Poly map(const TowerEmbedding& e) const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<FieldElement> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact or truncating quotient
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero only if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Extended Euclid: returns (g, s, t) with s a + t b = g monic.
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult xgcd(const Poly& a, const Poly& b);

/// Yun decomposition: a = lead(a) * prod f_i^i, with f_i monic square-free and
/// pairwise coprime. Entry k of the result is f_{k+1}.
std::vector<Poly> squarefree_decomposition(const Poly& a);

/// a = A1 * M^2 with A1 square-free; M is monic, the leading coefficient stays in A1.
std::pair<Poly, Poly> squarefree_part(const Poly& a);

bool is_squarefree(const Poly& a);

/// Smallest tower extending t that holds every non-rational coefficient of p.
TowerPtr absorb(TowerPtr t, const Poly& p);

}  // namespace qcliff
