#pragma once

// Exact arithmetic in number fields of the shape
//
//     Q(zeta_N)(sqrt(d_1))(sqrt(d_2))...(sqrt(d_k))
//
// i.e. a cyclotomic base followed by a tower of quadratic extensions, each
// radicand d_j living in the tower below it and checked to be a non-square
// there. Elements are coefficient vectors over the tower basis
//
//     zeta^a * r_1^{b_1} * ... * r_k^{b_k},   0 <= a < phi(N), b_j in {0,1},
//
// stored flat with index a + phi(N) * (b_1 + 2 b_2 + ... + 2^{k-1} b_k).
// With that layout an element of level j is (lo, hi) = lo + hi * r_j where
// lo and hi are the two contiguous halves of the vector.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcliff {

using Coeffs = std::vector<mpq_class>;

class FieldElement;
class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Raised when a computation needs a splitting field outside what the tower
/// machinery supports (never replaced by a numerical approximation).
class UnsupportedSplitting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by root finding when roots of unity outside the current
/// cyclotomic base are needed; callers rebase their data and retry.
class ConductorRequest : public std::runtime_error {
 public:
  explicit ConductorRequest(unsigned conductor)
      : std::runtime_error("cyclotomic conductor " + std::to_string(conductor) + " required"),
        conductor_(conductor) {}
  unsigned conductor() const { return conductor_; }

 private:
  unsigned conductor_;
};

unsigned euler_phi(unsigned n);
/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  /// Canonical base field Q(zeta_N); N must be a multiple of 4 so that i is present.
  static TowerPtr base(unsigned conductor = 4);

  unsigned conductor() const { return conductor_; }
  std::size_t base_degree() const { return phi_; }
  std::size_t depth() const { return depth_; }
  std::size_t degree() const { return phi_ << depth_; }
  const TowerPtr& parent() const { return parent_; }
  /// The node of this chain at the given depth (0 = base).
  const Tower* at_depth(std::size_t d) const;
  /// Radicand of the top radical, as coordinates in the parent tower.
  const Coeffs& radicand() const { return radicand_; }
  const std::string& symbol() const { return symbol_; }

  bool is_ancestor_of(const Tower& other) const;

  // Coordinate-level arithmetic for elements of exactly this depth.
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs inv(const Coeffs& a) const;
  std::optional<Coeffs> sqrt(const Coeffs& a) const;

 private:
  friend class TowerBuilder;
  Tower() = default;

  unsigned conductor_ = 4;
  std::size_t phi_ = 2;
  std::size_t depth_ = 0;
  TowerPtr parent_;
  Coeffs radicand_;
  std::string symbol_;
};

/// Smallest tower containing both; one must extend the other.
TowerPtr join(const TowerPtr& a, const TowerPtr& b);

class FieldElement {
 public:
  FieldElement();  // zero of Q(i)
  FieldElement(long v);  // NOLINT: implicit integers are convenient in formulas
  FieldElement(const mpq_class& v, TowerPtr tower = Tower::base());
  FieldElement(TowerPtr tower, Coeffs coords);

  static FieldElement zero(TowerPtr t) { return FieldElement(mpq_class(0), std::move(t)); }
  static FieldElement one(TowerPtr t) { return FieldElement(mpq_class(1), std::move(t)); }
  /// zeta_N^k in the base of the given tower (N must divide its conductor).
  static FieldElement root_of_unity(unsigned order, long k, TowerPtr t = Tower::base());
  static FieldElement imag_unit(TowerPtr t = Tower::base()) { return root_of_unity(4, 1, std::move(t)); }
  /// The top radical sqrt(d_k) of the tower.
  static FieldElement radical(const TowerPtr& t);

  const TowerPtr& tower() const { return tower_; }
  const Coeffs& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()
  /// Same value expressed in a tower extending this element's tower.
  FieldElement lifted(const TowerPtr& to) const;
  /// Index of the first nonzero coordinate, or -1 for zero.
  long leading_index() const;
  int leading_sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  std::string str() const;

 private:
  TowerPtr tower_;
  Coeffs c_;
};

/// Square root inside the element's own tower, or nullopt; never extends.
/// The root returned has positive leading coordinate.
std::optional<FieldElement> sqrt_in_tower(const FieldElement& a);

struct AdjoinResult {
  TowerPtr tower;
  FieldElement root;  // root^2 == a, lives in `tower`
  bool extended;
};

/// Returns a tower (the given one, or one quadratic step above it) holding a
/// square root of a. Rational radicands are reduced to square-free integers
/// and negative ones are pulled through i.
AdjoinResult tower_adjoin_sqrt(const TowerPtr& tower, const FieldElement& a);

/// Image of a tower under an enlargement of the cyclotomic base.
struct TowerEmbedding {
  TowerPtr source;
  TowerPtr target;
  std::vector<FieldElement> radical_images;
};

TowerEmbedding rebase_tower(const TowerPtr& source, unsigned conductor);
FieldElement embed(const FieldElement& x, const TowerEmbedding& e);

}  // namespace qcliff
