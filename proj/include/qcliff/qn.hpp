#pragma once

// The queer Lie superalgebra q(n) inside gl(n|n): block matrices [[A, B], [B, A]].
// Generators e_i, ē_i, f_i, f̄_i (i = 1..n-1) and k_l, k̄_l (l = 1..n), the
// supercommutator, and a table-driven check of the defining relations.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace qcliff {

enum class Parity { Even, Odd, Mixed };

class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(int n);  // zero matrix of size 2n

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  const mpq_class& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * size() + c)]; }
  mpq_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * size() + c)]; }

  Parity parity() const;
  bool is_zero() const;
  /// Diagonal blocks equal and off-diagonal blocks equal.
  bool in_qn() const;

  SuperMatrix operator-() const;
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const mpq_class& s, const SuperMatrix& a);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// Nonzero entries as "(r,c)=v" with 1-based indices.
  std::string entries() const;

 private:
  int n_ = 0;
  std::vector<mpq_class> a_;
};

/// The 2n x 2n matrix with E_{r,c} placed in the chosen n x n blocks.
SuperMatrix block_unit(int n, int r, int c, bool diagonal_blocks);

struct GeneratorSet {
  int n = 0;
  std::vector<SuperMatrix> e, ebar, f, fbar;  // index i-1 for i in I = {1..n-1}
  std::vector<SuperMatrix> k, kbar;           // index l-1 for l in J = {1..n}
};

GeneratorSet build_generators(int n);

/// ab - (-1)^{|a||b|} ba; throws std::invalid_argument on non-homogeneous input.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// One family of defining relations, stored as data.
struct RelationFamily {
  std::string name;       // e.g. "[e_i,f_j] = δ_ij (k_i - k_{i+1})"
  std::string group;      // "presentation", "replacing" or "replaced"
  std::string index_sets;  // one letter per index: 'I' = 1..n-1, 'J' = 1..n
  std::function<bool(const std::vector<int>&, int n)> condition;
  // lhs - rhs, which must vanish.
  std::function<SuperMatrix(const GeneratorSet&, const std::vector<int>&)> defect;
};

const std::vector<RelationFamily>& relation_table();

struct RelationResult {
  std::string family;
  std::string group;
  std::vector<int> indices;
  bool pass = false;
  std::string witness;  // nonzero entries of lhs - rhs when failing
};

struct RelationReport {
  int n = 0;
  std::vector<RelationResult> results;  // one per family and index tuple
  bool all_pass() const;
  /// Number of index tuples checked per family, in table order.
  std::vector<std::pair<std::string, std::pair<int, int>>> family_summary() const;  // name -> (passed, checked)
};

/// Requires n >= 2.
RelationReport verify_presentation(int n);

}  // namespace qcliff
