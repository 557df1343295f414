#pragma once

// The quantum Clifford superalgebra Cliff_q(λ): generators t_1..t_n with
// t_i t_j + t_j t_i = 2 δ_ij Λ_i, so t_i^2 = Λ_i and B(u, v) = (uv + vu) / 2.

#include "qcliff/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcliff {

struct Weight {
  std::vector<long> v;

  std::size_t n() const { return v.size(); }
  bool in_p_geq0() const;
  bool gl_dominant() const;
  /// gl-dominant and λ_i = λ_{i+1} only when both vanish.
  bool q_dominant() const;
  std::size_t size_nonzero() const;
  std::string str() const;  // "(4,2,1)"
};

/// Parses "a,b,c" (signed integers); throws std::invalid_argument.
Weight parse_weight(const std::string& text);

struct QuadSpace {
  std::vector<RatFunc> lambda;      // Λ_1..Λ_n
  std::vector<std::size_t> nonzero;  // N_Λ (0-based)
  std::vector<std::size_t> zero;     // Z_Λ (0-based)
  std::string var = "q";             // variable of the entries

  std::size_t n() const { return lambda.size(); }
  std::size_t size_nonzero() const { return nonzero.size(); }

  static QuadSpace from_values(std::vector<RatFunc> lambda, std::string var);
  /// Λ_i = lambda_cap(λ_i) in q.
  static QuadSpace from_weight(const Weight& w);
  /// Λ_i as polynomials in t = q^2 + q^-2.
  static QuadSpace from_weight_t(const Weight& w);
  /// Classical parameters: t_i^2 = λ_i (constants).
  static QuadSpace classical(const Weight& w);
};

using Subset = std::uint32_t;  // bit i-1 set <=> t_i present

class CliffElem {
 public:
  CliffElem() = default;
  explicit CliffElem(std::size_t n) : n_(n) {}
  static CliffElem basis(std::size_t n, Subset s, RatFunc c = RatFunc(1));
  static CliffElem generator(std::size_t n, std::size_t i);  // t_i, 1-based

  std::size_t n() const { return n_; }
  const std::map<Subset, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(Subset s) const;
  bool is_zero() const { return terms_.empty(); }
  /// 0 or 1 if homogeneous, -1 otherwise (zero counts as even).
  int parity() const;

  CliffElem& add(Subset s, const RatFunc& c);
  friend CliffElem operator+(const CliffElem& a, const CliffElem& b);
  friend CliffElem operator-(const CliffElem& a, const CliffElem& b);
  friend CliffElem operator*(const RatFunc& c, const CliffElem& a);
  friend bool operator==(const CliffElem& a, const CliffElem& b);

  std::string str(const std::string& var = "q") const;

 private:
  std::size_t n_ = 0;
  std::map<Subset, RatFunc> terms_;
};

/// Sign and subset of t_S t_T = sign * prod_{i in S∩T} Λ_i * t_{S xor T}.
int monomial_sign(Subset s, Subset t);

CliffElem cliff_mul(const CliffElem& x, const CliffElem& y, const QuadSpace& q);

struct KernelSplit {
  QuadSpace nondegenerate;         // restricted to N_Λ
  std::vector<std::size_t> kernel;  // Z_Λ (0-based, original indices)
  std::vector<std::size_t> kept;    // N_Λ (0-based, original indices)
};
KernelSplit split_kernel(const QuadSpace& q);

struct DiscriminantResult {
  bool orbit_route;     // every class {±m}, m != 1, has even size
  bool squarefree_route;  // Π Λ_i is a square over the closure
  bool agree() const { return orbit_route == squarefree_route; }
};
bool discriminant_square_by_orbits(const Weight& w);
bool discriminant_square_by_squarefree(const Weight& w);
DiscriminantResult discriminant_is_square(const Weight& w);

struct Classification {
  Weight lambda;
  std::size_t size_nonzero = 0;
  bool discriminant_square = true;
  int count = 1;
  long dim_even = 1;
  long dim_odd = 0;
  bool parity_invariant = false;
  long witt_index = 0;
};

/// Throws std::logic_error if the two discriminant routes disagree.
Classification classify_simples(const Weight& w);

}  // namespace qcliff
