#pragma once

// Witt decomposition V = W ⊕ W* ⊕ Z of the quadratic space (V, β),
// β(u_i, u_j) = δ_ij Λ_i, and explicit matrices for the simple module.

#include "qcliff/clifford.hpp"
#include "qcliff/legendre.hpp"
#include "qcliff/linalg.hpp"

#include <string>
#include <vector>

namespace qcliff {

using Vec = std::vector<RatFunc>;  // coordinates in the basis u_1..u_n

RatFunc beta(const QuadSpace& q, const Vec& u, const Vec& v);

struct WittDecomposition {
  std::string var = "q";
  std::vector<Vec> w, wstar, z;
  std::vector<RatFunc> z_norms;  // β(z_k, z_k)
  TowerPtr tower = Tower::base();
  std::vector<std::string> log;  // one line per Legendre or square-root step

  std::size_t witt_index() const { return w.size(); }
  /// Gram matrix of (w_1.., w*_1.., z_1..).
  Matrix<RatFunc> gram(const QuadSpace& q) const;
};

/// Requires every Λ_i nonzero (split the kernel first).
WittDecomposition witt_decompose(const QuadSpace& q);

/// All Gram identities, plus dim Z <= 2 and anisotropy of Z.
bool witt_check(const QuadSpace& q, const WittDecomposition& wd, std::string* why = nullptr);

struct ModuleMatrices {
  std::string var = "q";
  long dim_even = 1, dim_odd = 0;
  std::vector<Matrix<RatFunc>> T;  // one per original index; even basis vectors first
  long dim() const { return dim_even + dim_odd; }
};

/// Matrices of t_1..t_n on the module built from the decomposition of the
/// nondegenerate part; kernel generators act by zero. The Witt pairs are
/// peeled in order, (w_1, w*_1) giving the outermost tensor factor.
ModuleMatrices theta_matrices(const QuadSpace& full, const KernelSplit& split, const WittDecomposition& wd);

/// split_kernel + witt_decompose + theta_matrices.
ModuleMatrices build_module(const QuadSpace& full, WittDecomposition* wd_out = nullptr);

struct ModuleCheck {
  bool relations = false;       // T_i T_j + T_j T_i = 2 δ_ij Λ_i Id
  bool odd = false;             // every T_i swaps the even and odd halves
  bool faithful = false;        // span of the products T_S (S ⊆ N_Λ) has dimension 2^{|N_Λ|}
  std::size_t span_rank = 0;
  std::string failure;
  bool ok() const { return relations && odd && faithful; }
};
ModuleCheck verify_module_detail(const ModuleMatrices& mm, const QuadSpace& q);
bool verify_module(const ModuleMatrices& mm, const QuadSpace& q);

Matrix<RatFunc> mat_mul(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b);
Matrix<RatFunc> mat_zero(std::size_t r, std::size_t c);
Matrix<RatFunc> mat_identity(std::size_t n);

}  // namespace qcliff
