#include "qcliff/witt.hpp"

#include "qcliff/qnumbers.hpp"

#include <bit>
#include <stdexcept>

namespace qcliff {

RatFunc beta(const QuadSpace& q, const Vec& u, const Vec& v) {
  if (u.size() != q.n() || v.size() != q.n()) throw std::invalid_argument("beta: dimension mismatch");
  RatFunc s;
  for (std::size_t i = 0; i < q.n(); ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) s += q.lambda[i] * u[i] * v[i];
  return s;
}

namespace {

Vec scaled(const Vec& v, const RatFunc& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Vec axpy(const Vec& x, const RatFunc& a, const Vec& y) {  // x + a y
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
  return r;
}

void map_all(WittDecomposition& wd, std::vector<Vec>& basis, std::vector<RatFunc>& g, const TowerEmbedding& e) {
  auto map_vec = [&](Vec& v) {
    for (auto& c : v) c = c.map(e);
  };
  for (auto* list : {&wd.w, &wd.wstar, &basis})
    for (auto& v : *list) map_vec(v);
  for (auto& x : g) x = x.map(e);
}

}  // namespace

WittDecomposition witt_decompose(const QuadSpace& q) {
  for (const auto& l : q.lambda)
    if (l.is_zero()) throw std::invalid_argument("witt_decompose: split off the kernel first");
  WittDecomposition wd;
  wd.var = q.var;
  TowerPtr tower = Tower::base();
  for (const auto& l : q.lambda) tower = join(tower, l.tower());

  // Orthogonal basis of the part not yet decomposed, with its Gram values.
  const std::size_t n = q.n();
  std::vector<Vec> basis;
  std::vector<RatFunc> g;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = RatFunc(1);
    basis.push_back(e);
    g.push_back(q.lambda[i]);
  }

  while (basis.size() >= 3) {
    LegendreSolution s = q.var == "q" ? legendre_solve_q(g[0], g[1], g[2], tower) : legendre_solve(g[0], g[1], g[2], tower);
    if (s.tower->conductor() != tower->conductor()) {
      TowerEmbedding e = rebase_tower(tower, s.tower->conductor());
      map_all(wd, basis, g, e);
      wd.log.push_back("base enlarged to Q(zeta_" + std::to_string(s.tower->conductor()) + ")");
    }
    tower = s.tower;
    const RatFunc coef[3] = {s.X, s.Y, s.Z};
    Vec w = axpy(axpy(scaled(basis[0], s.X), s.Y, basis[1]), s.Z, basis[2]);
    std::size_t j = 0;
    while (coef[j].is_zero()) ++j;
    Vec x = scaled(basis[j], (coef[j] * g[j]).inverse());
    Vec ws = axpy(x, -beta(q, x, x) / RatFunc(2), w);
    // e-coordinates of w and w*: (coef) and (y)
    RatFunc y[3];
    for (std::size_t k = 0; k < 3; ++k) y[k] = beta(q, ws, basis[k]) / g[k];
    const FieldElement i = FieldElement::imag_unit(tower);
    RatFunc zc[3] = {RatFunc(i) * g[1] * g[2] * (coef[1] * y[2] - coef[2] * y[1]),
                     RatFunc(i) * g[0] * g[2] * (coef[2] * y[0] - coef[0] * y[2]),
                     RatFunc(i) * g[0] * g[1] * (coef[0] * y[1] - coef[1] * y[0])};
    Vec z = axpy(axpy(scaled(basis[0], zc[0]), zc[1], basis[1]), zc[2], basis[2]);
    RatFunc zz = beta(q, z, z);
    wd.log.push_back("Legendre (" + g[0].str(q.var) + ", " + g[1].str(q.var) + ", " + g[2].str(q.var) + ") by " +
                     s.method + ": X = " + s.X.str(q.var) + ", Y = " + s.Y.str(q.var) + ", Z = " + s.Z.str(q.var));
    wd.w.push_back(std::move(w));
    wd.wstar.push_back(std::move(ws));
    basis.erase(basis.begin(), basis.begin() + 3);
    g.erase(g.begin(), g.begin() + 3);
    basis.insert(basis.begin(), std::move(z));
    g.insert(g.begin(), std::move(zz));
  }

  if (basis.size() == 2) {
    RatFunc ratio = -g[0] / g[1];
    if (ratfunc_is_square_over_closure(ratio)) {
      auto r = ratfunc_sqrt(ratio, tower);
      if (!r) throw std::logic_error("square root of a square failed");
      tower = r->tower;
      Vec w = axpy(basis[0], r->root, basis[1]);
      Vec x = scaled(basis[0], g[0].inverse());
      Vec ws = axpy(x, -beta(q, x, x) / RatFunc(2), w);
      wd.log.push_back("isotropic pair from sqrt(" + ratio.str(q.var) + ") = " + r->root.str(q.var));
      wd.w.push_back(std::move(w));
      wd.wstar.push_back(std::move(ws));
      basis.clear();
      g.clear();
    }
  }
  wd.z = std::move(basis);
  wd.z_norms = std::move(g);
  for (const auto& v : wd.w)
    for (const auto& c : v) tower = join(tower, c.tower());
  wd.tower = tower;
  return wd;
}

Matrix<RatFunc> WittDecomposition::gram(const QuadSpace& q) const {
  std::vector<const Vec*> all;
  for (const auto& v : w) all.push_back(&v);
  for (const auto& v : wstar) all.push_back(&v);
  for (const auto& v : z) all.push_back(&v);
  Matrix<RatFunc> m(all.size(), std::vector<RatFunc>(all.size()));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) m[a][b] = m[b][a] = beta(q, *all[a], *all[b]);
  return m;
}

bool witt_check(const QuadSpace& q, const WittDecomposition& wd, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t m = wd.w.size(), d = wd.z.size();
  if (wd.wstar.size() != m) return fail("w and w* differ in length");
  if (wd.z_norms.size() != d) return fail("missing z norms");
  if (2 * m + d != q.n()) return fail("dimensions do not add up");
  if (d > 2) return fail("dim Z > 2");
  Matrix<RatFunc> G = wd.gram(q);
  for (std::size_t a = 0; a < 2 * m + d; ++a)
    for (std::size_t b = 0; b < 2 * m + d; ++b) {
      RatFunc expect;
      if (a < m && b == a + m) expect = RatFunc(1);
      else if (b < m && a == b + m) expect = RatFunc(1);
      else if (a >= 2 * m && a == b) expect = wd.z_norms[a - 2 * m];
      if (G[a][b] != expect)
        return fail("Gram entry (" + std::to_string(a) + "," + std::to_string(b) + ") is " + G[a][b].str(q.var));
    }
  for (const auto& nz : wd.z_norms)
    if (nz.is_zero()) return fail("isotropic z");
  if (d == 2 && ratfunc_is_square_over_closure(-wd.z_norms[0] * wd.z_norms[1]))
    return fail("Z of dimension 2 is isotropic");
  return true;
}

Matrix<RatFunc> mat_zero(std::size_t r, std::size_t c) { return Matrix<RatFunc>(r, std::vector<RatFunc>(c)); }

Matrix<RatFunc> mat_identity(std::size_t n) {
  Matrix<RatFunc> m = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

Matrix<RatFunc> mat_mul(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b) {
  const std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  Matrix<RatFunc> m = mat_zero(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j)
        if (!b[l][j].is_zero()) m[i][j] += a[i][l] * b[l][j];
    }
  return m;
}

namespace {

// Basis states: bits of the Witt pairs (bit j set = odd vector of pair j),
// times the states of the Z factor.
struct State {
  std::size_t pairs;
  std::size_t zi;
};

int z_parity(std::size_t dz, std::size_t zi) {
  if (dz == 0) return 0;
  if (dz == 1) return static_cast<int>(zi);
  return zi >= 2 ? 1 : 0;  // (1, z1z2 | z1, z2)
}

}  // namespace

ModuleMatrices theta_matrices(const QuadSpace& full, const KernelSplit& split, const WittDecomposition& wd) {
  const QuadSpace& q = split.nondegenerate;
  const std::size_t m = wd.w.size(), dz = wd.z.size();
  if (dz > 2) throw std::logic_error("theta_matrices: dim Z > 2");
  const std::size_t zstates = dz == 0 ? 1 : (dz == 1 ? 2 : 4);
  const std::size_t dim = (std::size_t(1) << m) * zstates;

  // Even states first, each half in lexicographic (pairs, zi) order.
  std::vector<State> states;
  std::vector<std::size_t> index(dim);
  for (int want = 0; want < 2; ++want)
    for (std::size_t p = 0; p < (std::size_t(1) << m); ++p)
      for (std::size_t zi = 0; zi < zstates; ++zi)
        if ((std::popcount(p) + z_parity(dz, zi)) % 2 == want) {
          index[p * zstates + zi] = states.size();
          states.push_back({p, zi});
        }
  ModuleMatrices mm;
  mm.var = full.var;
  mm.dim_even = 0;
  for (const auto& s : states) mm.dim_even += (std::popcount(s.pairs) + z_parity(dz, s.zi)) % 2 == 0;
  mm.dim_odd = static_cast<long>(dim) - mm.dim_even;
  auto at = [&](std::size_t p, std::size_t zi) { return index[p * zstates + zi]; };

  // Operators of the graded tensor factors.
  auto sign_before = [](std::size_t p, std::size_t j) { return std::popcount(p & ((std::size_t(1) << j) - 1)) % 2 ? -1 : 1; };
  std::vector<Matrix<RatFunc>> W(m, mat_zero(dim, dim)), Ws(m, mat_zero(dim, dim)), Z(dz, mat_zero(dim, dim));
  for (const auto& s : states) {
    const std::size_t col = at(s.pairs, s.zi);
    for (std::size_t j = 0; j < m; ++j) {
      const long sg = sign_before(s.pairs, j);
      const std::size_t flipped = s.pairs ^ (std::size_t(1) << j);
      if (s.pairs >> j & 1) W[j][at(flipped, s.zi)][col] = RatFunc(sg);
      else Ws[j][at(flipped, s.zi)][col] = RatFunc(2 * sg);
    }
    const long zs = std::popcount(s.pairs) % 2 ? -1 : 1;
    if (dz == 1) {
      if (s.zi == 0) Z[0][at(s.pairs, 1)][col] = RatFunc(zs);
      else Z[0][at(s.pairs, 0)][col] = RatFunc(zs) * wd.z_norms[0];
    } else if (dz == 2) {
      const RatFunc& g1 = wd.z_norms[0];
      const RatFunc& g2 = wd.z_norms[1];
      static const std::size_t z1_to[4] = {2, 3, 0, 1}, z2_to[4] = {3, 2, 1, 0};
      const RatFunc z1_c[4] = {RatFunc(1), g1, g1, RatFunc(1)};
      const RatFunc z2_c[4] = {RatFunc(1), -g2, RatFunc(-1), g2};
      Z[0][at(s.pairs, z1_to[s.zi])][col] = RatFunc(zs) * z1_c[s.zi];
      Z[1][at(s.pairs, z2_to[s.zi])][col] = RatFunc(zs) * z2_c[s.zi];
    }
  }

  mm.T.assign(full.n(), mat_zero(dim, dim));
  for (std::size_t a = 0; a < split.kept.size(); ++a) {
    Vec u(q.n());
    u[a] = RatFunc(1);
    Matrix<RatFunc>& T = mm.T[split.kept[a]];
    auto add = [&](const Matrix<RatFunc>& M, const RatFunc& c) {
      if (c.is_zero()) return;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k)
          if (!M[r][k].is_zero()) T[r][k] += c * M[r][k];
    };
    for (std::size_t j = 0; j < m; ++j) {
      add(W[j], beta(q, u, wd.wstar[j]));
      add(Ws[j], beta(q, u, wd.w[j]));
    }
    for (std::size_t k = 0; k < dz; ++k) add(Z[k], beta(q, u, wd.z[k]) / wd.z_norms[k]);
  }
  return mm;
}

ModuleMatrices build_module(const QuadSpace& full, WittDecomposition* wd_out) {
  KernelSplit split = split_kernel(full);
  WittDecomposition wd = witt_decompose(split.nondegenerate);
  ModuleMatrices mm = theta_matrices(full, split, wd);
  if (wd_out) *wd_out = std::move(wd);
  return mm;
}

namespace {

// Rank of the products T_S, first at rational specializations of the
// variable (rank can only drop there), then exactly.
std::size_t product_span_rank(const std::vector<Matrix<RatFunc>>& prods) {
  if (prods.empty()) return 0;
  const std::size_t d = prods[0].size();
  for (long num : {3, 7, 11, 13}) {
    FieldElement x(mpq_class(num, 5));
    Matrix<FieldElement> rows;
    try {
      for (const auto& P : prods) {
        std::vector<FieldElement> row;
        row.reserve(d * d);
        for (const auto& r : P)
          for (const auto& e : r) row.push_back(e.eval(x));
        rows.push_back(std::move(row));
      }
    } catch (const std::domain_error&) {
      continue;
    }
    std::size_t rk = rank(rows);
    if (rk == prods.size()) return rk;
  }
  Matrix<RatFunc> rows;
  for (const auto& P : prods) {
    std::vector<RatFunc> row;
    for (const auto& r : P) row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  return rank(rows);
}

}  // namespace

ModuleCheck verify_module_detail(const ModuleMatrices& mm, const QuadSpace& q) {
  ModuleCheck c;
  const std::size_t d = static_cast<std::size_t>(mm.dim());
  if (mm.T.size() != q.n()) {
    c.failure = "expected " + std::to_string(q.n()) + " matrices";
    return c;
  }
  for (const auto& T : mm.T) {
    if (T.size() != d) {
      c.failure = "matrix of wrong size";
      return c;
    }
    for (const auto& r : T)
      if (r.size() != d) {
        c.failure = "matrix of wrong size";
        return c;
      }
  }
  c.relations = true;
  for (std::size_t i = 0; i < q.n() && c.relations; ++i)
    for (std::size_t j = i; j < q.n() && c.relations; ++j) {
      Matrix<RatFunc> a = mat_mul(mm.T[i], mm.T[j]), b = mat_mul(mm.T[j], mm.T[i]);
      const RatFunc diag = i == j ? RatFunc(2) * q.lambda[i] : RatFunc();
      for (std::size_t r = 0; r < d && c.relations; ++r)
        for (std::size_t k = 0; k < d; ++k)
          if (a[r][k] + b[r][k] != (r == k ? diag : RatFunc())) {
            c.relations = false;
            c.failure = "T" + std::to_string(i + 1) + "T" + std::to_string(j + 1) + " + T" + std::to_string(j + 1) + "T" +
                        std::to_string(i + 1) + " differs at (" + std::to_string(r) + "," + std::to_string(k) + ")";
            break;
          }
    }
  c.odd = true;
  const std::size_t e = static_cast<std::size_t>(mm.dim_even);
  for (std::size_t i = 0; i < q.n() && c.odd; ++i)
    for (std::size_t r = 0; r < d && c.odd; ++r)
      for (std::size_t k = 0; k < d; ++k)
        if ((r < e) == (k < e) && !mm.T[i][r][k].is_zero()) {
          c.odd = false;
          if (c.failure.empty()) c.failure = "T" + std::to_string(i + 1) + " is not odd";
          break;
        }
  std::vector<Matrix<RatFunc>> prods;
  const std::size_t s = q.nonzero.size();
  if (s > 20) {
    c.failure = "too many generators for the span check";
    return c;
  }
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    Matrix<RatFunc> P = mat_identity(d);
    for (std::size_t b = 0; b < s; ++b)
      if (mask >> b & 1) P = mat_mul(P, mm.T[q.nonzero[b]]);
    prods.push_back(std::move(P));
  }
  c.span_rank = product_span_rank(prods);
  c.faithful = c.span_rank == prods.size();
  if (!c.faithful && c.failure.empty())
    c.failure = "products span dimension " + std::to_string(c.span_rank) + " < " + std::to_string(prods.size());
  return c;
}

bool verify_module(const ModuleMatrices& mm, const QuadSpace& q) { return verify_module_detail(mm, q).ok(); }

}  // namespace qcliff
