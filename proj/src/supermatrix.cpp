#include "qcliff/qn.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qcliff {

SuperMatrix::SuperMatrix(int n) : n_(n), a_(static_cast<std::size_t>(4 * n * n)) {}

Parity SuperMatrix::parity() const {
  bool even_part = false, odd_part = false;
  for (int r = 0; r < size(); ++r)
    for (int c = 0; c < size(); ++c) {
      if ((*this)(r, c) == 0) continue;
      if ((r < n_) == (c < n_)) even_part = true;
      else odd_part = true;
    }
  if (even_part && odd_part) return Parity::Mixed;
  return odd_part ? Parity::Odd : Parity::Even;
}

bool SuperMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool SuperMatrix::in_qn() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      if ((*this)(r, c) != (*this)(r + n_, c + n_)) return false;
      if ((*this)(r, c + n_) != (*this)(r + n_, c)) return false;
    }
  return true;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix m(*this);
  for (auto& v : m.a_) v = -v;
  return m;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix m(a);
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix m(a);
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  SuperMatrix m(a.n_);
  const int s = a.size();
  for (int r = 0; r < s; ++r)
    for (int k = 0; k < s; ++k) {
      const mpq_class& x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < s; ++c)
        if (b(k, c) != 0) m(r, c) += x * b(k, c);
    }
  return m;
}

SuperMatrix operator*(const mpq_class& s, const SuperMatrix& a) {
  SuperMatrix m(a);
  for (auto& v : m.a_) v *= s;
  return m;
}

std::string SuperMatrix::entries() const {
  std::ostringstream os;
  bool first = true;
  for (int r = 0; r < size(); ++r)
    for (int c = 0; c < size(); ++c)
      if ((*this)(r, c) != 0) {
        os << (first ? "" : " ") << "(" << r + 1 << "," << c + 1 << ")=" << (*this)(r, c).get_str();
        first = false;
      }
  return first ? "0" : os.str();
}

SuperMatrix block_unit(int n, int r, int c, bool diagonal_blocks) {
  SuperMatrix m(n);
  if (diagonal_blocks) {
    m(r - 1, c - 1) = 1;
    m(r - 1 + n, c - 1 + n) = 1;
  } else {
    m(r - 1, c - 1 + n) = 1;
    m(r - 1 + n, c - 1) = 1;
  }
  return m;
}

GeneratorSet build_generators(int n) {
  if (n < 2) throw std::invalid_argument("q(n) generators need n >= 2");
  GeneratorSet g;
  g.n = n;
  for (int i = 1; i < n; ++i) {
    g.e.push_back(block_unit(n, i, i + 1, true));
    g.ebar.push_back(block_unit(n, i, i + 1, false));
    g.f.push_back(block_unit(n, i + 1, i, true));
    g.fbar.push_back(block_unit(n, i + 1, i, false));
  }
  for (int l = 1; l <= n; ++l) {
    g.k.push_back(block_unit(n, l, l, true));
    g.kbar.push_back(block_unit(n, l, l, false));
  }
  return g;
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  const Parity pa = a.parity(), pb = b.parity();
  if (pa == Parity::Mixed || pb == Parity::Mixed) throw std::invalid_argument("supercommutator of a non-homogeneous matrix");
  SuperMatrix ab = a * b, ba = b * a;
  if (pa == Parity::Odd && pb == Parity::Odd) return ab + ba;
  return ab - ba;
}

namespace {

using Idx = std::vector<int>;
SuperMatrix br(const SuperMatrix& a, const SuperMatrix& b) { return supercommutator(a, b); }
int delta(int a, int b) { return a == b ? 1 : 0; }
// alpha_i(k_l)
int alpha(int i, int l) { return delta(l, i) - delta(l, i + 1); }

// 1-based accessors
const SuperMatrix& E(const GeneratorSet& g, int i) { return g.e[static_cast<std::size_t>(i - 1)]; }
const SuperMatrix& Eb(const GeneratorSet& g, int i) { return g.ebar[static_cast<std::size_t>(i - 1)]; }
const SuperMatrix& F(const GeneratorSet& g, int i) { return g.f[static_cast<std::size_t>(i - 1)]; }
const SuperMatrix& Fb(const GeneratorSet& g, int i) { return g.fbar[static_cast<std::size_t>(i - 1)]; }
const SuperMatrix& K(const GeneratorSet& g, int l) { return g.k[static_cast<std::size_t>(l - 1)]; }
const SuperMatrix& Kb(const GeneratorSet& g, int l) { return g.kbar[static_cast<std::size_t>(l - 1)]; }

bool always(const Idx&, int) { return true; }
bool not_adjacent(const Idx& x, int) { return std::abs(x[0] - x[1]) != 1; }
bool far_apart(const Idx& x, int) { return std::abs(x[0] - x[1]) > 1; }
bool adjacent(const Idx& x, int) { return std::abs(x[0] - x[1]) == 1; }
bool has_next(const Idx& x, int n) { return x[0] + 1 <= n - 1; }

std::vector<RelationFamily> make_table() {
  using G = const GeneratorSet&;
  std::vector<RelationFamily> t;
  auto add = [&](std::string name, std::string group, std::string idx,
                 std::function<bool(const Idx&, int)> cond, std::function<SuperMatrix(G, const Idx&)> defect) {
    t.push_back({std::move(name), std::move(group), std::move(idx), std::move(cond), std::move(defect)});
  };
  const std::string P = "presentation";
  // h runs over the basis k_1..k_n of the even Cartan part.
  add("[h,h'] = 0", P, "JJ", always, [](G g, const Idx& x) { return br(K(g, x[0]), K(g, x[1])); });
  add("[h,e_i] = α_i(h) e_i", P, "JI", always,
      [](G g, const Idx& x) { return br(K(g, x[0]), E(g, x[1])) - mpq_class(alpha(x[1], x[0])) * E(g, x[1]); });
  add("[h,ē_i] = α_i(h) ē_i", P, "JI", always,
      [](G g, const Idx& x) { return br(K(g, x[0]), Eb(g, x[1])) - mpq_class(alpha(x[1], x[0])) * Eb(g, x[1]); });
  add("[h,f_i] = -α_i(h) f_i", P, "JI", always,
      [](G g, const Idx& x) { return br(K(g, x[0]), F(g, x[1])) + mpq_class(alpha(x[1], x[0])) * F(g, x[1]); });
  add("[h,f̄_i] = -α_i(h) f̄_i", P, "JI", always,
      [](G g, const Idx& x) { return br(K(g, x[0]), Fb(g, x[1])) + mpq_class(alpha(x[1], x[0])) * Fb(g, x[1]); });
  add("[h,k̄_l] = 0", P, "JJ", always, [](G g, const Idx& x) { return br(K(g, x[0]), Kb(g, x[1])); });
  add("[e_i,f_j] = δ_ij (k_i - k_{i+1})", P, "II", always, [](G g, const Idx& x) {
    return br(E(g, x[0]), F(g, x[1])) - mpq_class(delta(x[0], x[1])) * (K(g, x[0]) - K(g, x[0] + 1));
  });
  add("[e_i,f̄_j] = δ_ij (k̄_i - k̄_{i+1})", P, "II", always, [](G g, const Idx& x) {
    return br(E(g, x[0]), Fb(g, x[1])) - mpq_class(delta(x[0], x[1])) * (Kb(g, x[0]) - Kb(g, x[0] + 1));
  });
  add("[ē_i,f_j] = δ_ij (k̄_i - k̄_{i+1})", P, "II", always, [](G g, const Idx& x) {
    return br(Eb(g, x[0]), F(g, x[1])) - mpq_class(delta(x[0], x[1])) * (Kb(g, x[0]) - Kb(g, x[0] + 1));
  });
  add("[k̄_l,e_i] = α_i(k_l) ē_i", P, "JI", always,
      [](G g, const Idx& x) { return br(Kb(g, x[0]), E(g, x[1])) - mpq_class(alpha(x[1], x[0])) * Eb(g, x[1]); });
  add("[k̄_l,f_i] = -α_i(k_l) f̄_i", P, "JI", always,
      [](G g, const Idx& x) { return br(Kb(g, x[0]), F(g, x[1])) + mpq_class(alpha(x[1], x[0])) * Fb(g, x[1]); });
  add("[ē_i,f̄_j] = δ_ij (k_i + k_{i+1})", P, "II", always, [](G g, const Idx& x) {
    return br(Eb(g, x[0]), Fb(g, x[1])) - mpq_class(delta(x[0], x[1])) * (K(g, x[0]) + K(g, x[0] + 1));
  });
  add("[k̄_l,ē_i] = e_i if l in {i,i+1}, else 0", P, "JI", always, [](G g, const Idx& x) {
    const int l = x[0], i = x[1];
    return br(Kb(g, l), Eb(g, i)) - mpq_class(l == i || l == i + 1 ? 1 : 0) * E(g, i);
  });
  add("[k̄_l,f̄_i] = f_i if l in {i,i+1}, else 0", P, "JI", always, [](G g, const Idx& x) {
    const int l = x[0], i = x[1];
    return br(Kb(g, l), Fb(g, i)) - mpq_class(l == i || l == i + 1 ? 1 : 0) * F(g, i);
  });
  add("[e_i,ē_j] = 0 (|i-j| != 1)", P, "II", not_adjacent, [](G g, const Idx& x) { return br(E(g, x[0]), Eb(g, x[1])); });
  add("[ē_i,ē_j] = 0 (|i-j| != 1)", P, "II", not_adjacent, [](G g, const Idx& x) { return br(Eb(g, x[0]), Eb(g, x[1])); });
  add("[f_i,f̄_j] = 0 (|i-j| != 1)", P, "II", not_adjacent, [](G g, const Idx& x) { return br(F(g, x[0]), Fb(g, x[1])); });
  add("[f̄_i,f̄_j] = 0 (|i-j| != 1)", P, "II", not_adjacent, [](G g, const Idx& x) { return br(Fb(g, x[0]), Fb(g, x[1])); });
  add("[e_i,e_j] = 0 (|i-j| > 1)", P, "II", far_apart, [](G g, const Idx& x) { return br(E(g, x[0]), E(g, x[1])); });
  add("[f_i,f_j] = 0 (|i-j| > 1)", P, "II", far_apart, [](G g, const Idx& x) { return br(F(g, x[0]), F(g, x[1])); });
  const std::string R = "replacing";
  add("[e_i,e_{i+1}] = [ē_i,ē_{i+1}]", R, "I", has_next, [](G g, const Idx& x) {
    const int i = x[0];
    return br(E(g, i), E(g, i + 1)) - br(Eb(g, i), Eb(g, i + 1));
  });
  add("[e_i,ē_{i+1}] = [ē_i,e_{i+1}]", R, "I", has_next, [](G g, const Idx& x) {
    const int i = x[0];
    return br(E(g, i), Eb(g, i + 1)) - br(Eb(g, i), E(g, i + 1));
  });
  add("[f_{i+1},f_i] = [f̄_{i+1},f̄_i]", R, "I", has_next, [](G g, const Idx& x) {
    const int i = x[0];
    return br(F(g, i + 1), F(g, i)) - br(Fb(g, i + 1), Fb(g, i));
  });
  add("[f_{i+1},f̄_i] = [f̄_{i+1},f_i]", R, "I", has_next, [](G g, const Idx& x) {
    const int i = x[0];
    return br(F(g, i + 1), Fb(g, i)) - br(Fb(g, i + 1), F(g, i));
  });
  add("[k̄_i,k̄_j] = 2 δ_ij k_i", P, "JJ", always, [](G g, const Idx& x) {
    return br(Kb(g, x[0]), Kb(g, x[1])) - mpq_class(2 * delta(x[0], x[1])) * K(g, x[0]);
  });
  add("[e_i,[e_i,e_j]] = 0 (|i-j| = 1)", P, "II", adjacent,
      [](G g, const Idx& x) { return br(E(g, x[0]), br(E(g, x[0]), E(g, x[1]))); });
  add("[ē_i,[e_i,e_j]] = 0 (|i-j| = 1)", P, "II", adjacent,
      [](G g, const Idx& x) { return br(Eb(g, x[0]), br(E(g, x[0]), E(g, x[1]))); });
  add("[f_i,[f_i,f_j]] = 0 (|i-j| = 1)", P, "II", adjacent,
      [](G g, const Idx& x) { return br(F(g, x[0]), br(F(g, x[0]), F(g, x[1]))); });
  add("[f̄_i,[f_i,f_j]] = 0 (|i-j| = 1)", P, "II", adjacent,
      [](G g, const Idx& x) { return br(Fb(g, x[0]), br(F(g, x[0]), F(g, x[1]))); });
  const std::string O = "replaced";
  add("[ē_i,[e_i,ē_j]] = 0 (|i-j| = 1)", O, "II", adjacent,
      [](G g, const Idx& x) { return br(Eb(g, x[0]), br(E(g, x[0]), Eb(g, x[1]))); });
  add("[f̄_i,[f_i,f̄_j]] = 0 (|i-j| = 1)", O, "II", adjacent,
      [](G g, const Idx& x) { return br(Fb(g, x[0]), br(F(g, x[0]), Fb(g, x[1]))); });
  return t;
}

void enumerate(const std::string& sets, int n, std::size_t pos, Idx& cur, const std::function<void(const Idx&)>& fn) {
  if (pos == sets.size()) {
    fn(cur);
    return;
  }
  const int hi = sets[pos] == 'I' ? n - 1 : n;
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    enumerate(sets, n, pos + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<RelationFamily>& relation_table() {
  static const std::vector<RelationFamily> table = make_table();
  return table;
}

bool RelationReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<std::pair<std::string, std::pair<int, int>>> RelationReport::family_summary() const {
  std::vector<std::pair<std::string, std::pair<int, int>>> out;
  for (const auto& fam : relation_table()) out.push_back({fam.name, {0, 0}});
  for (const auto& r : results)
    for (auto& [name, counts] : out)
      if (name == r.family) {
        counts.second++;
        if (r.pass) counts.first++;
      }
  return out;
}

RelationReport verify_presentation(int n) {
  const GeneratorSet g = build_generators(n);
  RelationReport rep;
  rep.n = n;
  for (const auto& fam : relation_table()) {
    Idx cur;
    enumerate(fam.index_sets, n, 0, cur, [&](const Idx& idx) {
      if (!fam.condition(idx, n)) return;
      SuperMatrix d = fam.defect(g, idx);
      RelationResult r{fam.name, fam.group, idx, d.is_zero(), ""};
      if (!r.pass) r.witness = d.entries();
      rep.results.push_back(std::move(r));
    });
  }
  return rep;
}

}  // namespace qcliff
