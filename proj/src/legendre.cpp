#include "qcliff/legendre.hpp"

#include "qcliff/linalg.hpp"
#include "qcliff/qnumbers.hpp"
#include "qcliff/roots.hpp"

#include <functional>

namespace qcliff {

namespace {

struct PolyTriple {
  Poly X, Y, Z;
};

// a X^2 + b Y^2 + c Z^2 = 0 with original X = mx * X' and so on.
struct Normalized {
  Poly a, b, c;
  RatFunc mx, my, mz;
};

Normalized normalize(const RatFunc& A, const RatFunc& B, const RatFunc& C) {
  if (A.is_zero() || B.is_zero() || C.is_zero()) throw std::invalid_argument("Legendre coefficients must be nonzero");
  Normalized n{A.num() * A.den(), B.num() * B.den(), C.num() * C.den(), RatFunc(A.den()), RatFunc(B.den()),
               RatFunc(C.den())};
  Poly* coef[3] = {&n.a, &n.b, &n.c};
  RatFunc* mult[3] = {&n.mx, &n.my, &n.mz};
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < 3; ++k) {
      auto [p1, m] = squarefree_part(*coef[k]);
      if (!m.is_constant()) {
        *coef[k] = p1;
        *mult[k] /= RatFunc(m);
        changed = true;
      }
    }
    for (int k = 0; k < 3; ++k) {
      const int i = k, j = (k + 1) % 3, l = (k + 2) % 3;
      Poly g = gcd(*coef[i], *coef[j]);
      if (g.is_constant()) continue;
      *coef[i] = *coef[i] / g;
      *coef[j] = *coef[j] / g;
      *coef[l] = *coef[l] * g;
      *mult[i] /= RatFunc(g);
      *mult[j] /= RatFunc(g);
      changed = true;
    }
  }
  return n;
}

// A X^2 + B Y^2 = Z^2 for square-free A, B.
PolyTriple descent(const Poly& A, const Poly& B, TowerPtr& t) {
  if (A.degree() < B.degree()) {
    PolyTriple s = descent(B, A, t);
    return {s.Y, s.X, s.Z};
  }
  if (A.degree() == 0) {
    auto adj = tower_adjoin_sqrt(t, A.lead());
    t = adj.tower;
    return {Poly(1), Poly(), Poly(adj.root)};
  }
  auto res = quadratic_residue_mod(B, A, t);
  t = res.tower;
  const Poly& C1 = res.y;
  auto [T, rem] = divmod(C1 * C1 - B, A);
  if (!rem.is_zero()) throw std::logic_error("residue does not satisfy the congruence");
  if (T.is_zero()) return {Poly(), Poly(1), C1};
  auto [A1, M] = squarefree_part(T);
  PolyTriple s = descent(A1, B, t);
  return {A1 * s.X * M, C1 * s.Y + s.Z, s.Z * C1 + B * s.Y};
}

PolyTriple solve_descent(const Normalized& n, TowerPtr& t) {
  const Poly A = -(n.a * n.c), B = -(n.b * n.c);
  PolyTriple s = descent(A, B, t);
  return {n.c * s.X, n.c * s.Y, s.Z};
}

PolyTriple solve_lattice(const Normalized& n, TowerPtr& t) {
  const Poly &a = n.a, &b = n.b, &c = n.c;
  const std::size_t dX = static_cast<std::size_t>((b.degree() + c.degree()) / 2);
  const std::size_t dY = static_cast<std::size_t>((a.degree() + c.degree()) / 2);
  const std::size_t dZ = static_cast<std::size_t>((a.degree() + b.degree()) / 2);
  const std::size_t nx = dX + 1, ny = dY + 1, nz = dZ + 1, cols = nx + ny + nz;
  const std::size_t offset[3] = {0, nx, nx + ny};

  // Root data first so that everything lives in one tower.
  struct Cond {
    FieldElement z, r;
    int lhs, rhs;  // variable lhs - r * variable rhs vanishes at z
  };
  std::vector<Cond> conds;
  const Poly* coef[3] = {&a, &b, &c};
  for (int k = 0; k < 3; ++k) {
    // Root of coef[k]: the other two must satisfy coef[k+1] V1^2 + coef[k+2] V2^2 = 0.
    const Poly& p = *coef[k];
    if (p.is_constant()) continue;
    const int v1 = (k + 1) % 3, v2 = (k + 2) % 3;
    RootSet rs = find_roots(p, t);
    t = rs.tower;
    for (const auto& z : rs.roots) {
      FieldElement zz = z.lifted(t);
      FieldElement ratio = -coef[v2]->eval(zz) / coef[v1]->eval(zz);
      auto adj = tower_adjoin_sqrt(t, ratio);
      t = adj.tower;
      conds.push_back({zz, adj.root, v1, v2});
    }
  }
  Matrix<FieldElement> m;
  for (const auto& cd : conds) {
    std::vector<FieldElement> row(cols, FieldElement::zero(t));
    const FieldElement z = cd.z.lifted(t), r = cd.r.lifted(t);
    FieldElement zp = FieldElement::one(t);
    const std::size_t deg[3] = {dX, dY, dZ};
    for (std::size_t e = 0; e <= std::max({dX, dY, dZ}); ++e) {
      if (e <= deg[cd.lhs]) row[offset[cd.lhs] + e] += zp;
      if (e <= deg[cd.rhs]) row[offset[cd.rhs] + e] -= r * zp;
      zp *= z;
    }
    m.push_back(std::move(row));
  }
  auto basis = nullspace(m, cols);
  if (basis.size() < 2) throw std::logic_error("lattice solution space too small");

  auto unpack = [&](const std::vector<FieldElement>& v) {
    auto part = [&](std::size_t off, std::size_t len) {
      return Poly(std::vector<FieldElement>(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + len)));
    };
    return PolyTriple{part(0, nx), part(nx, ny), part(nx + ny, nz)};
  };
  const std::size_t D = static_cast<std::size_t>(a.degree() + b.degree() + c.degree());
  auto form = [&](const PolyTriple& u, const PolyTriple& v) {
    return (a * u.X * v.X + b * u.Y * v.Y + c * u.Z * v.Z).coeff(D);
  };
  std::vector<PolyTriple> vecs;
  for (const auto& v : basis) vecs.push_back(unpack(v));
  // Isotropic vector of the constant form on the span.
  for (const auto& v : vecs)
    if (form(v, v).is_zero()) return v;
  const FieldElement k00 = form(vecs[0], vecs[0]), k01 = form(vecs[0], vecs[1]), k11 = form(vecs[1], vecs[1]);
  FieldElement disc = k01 * k01 - k00 * k11;
  FieldElement s;
  if (disc.is_zero()) {
    s = -k01 / k00;
  } else {
    auto adj = tower_adjoin_sqrt(t, disc);
    t = adj.tower;
    s = (-k01 + adj.root) / k00;
  }
  return {vecs[0].X * s + vecs[1].X, vecs[0].Y * s + vecs[1].Y, vecs[0].Z * s + vecs[1].Z};
}

TowerPtr input_tower(const TowerPtr& t, const RatFunc& A, const RatFunc& B, const RatFunc& C) {
  TowerPtr r = t;
  for (const RatFunc* f : {&A, &B, &C}) r = absorb(absorb(r, f->num()), f->den());
  return r;
}

LegendreSolution finish(const RatFunc& A, const RatFunc& B, const RatFunc& C, const Normalized& n,
                        const PolyTriple& s, const TowerPtr& t, std::string method) {
  RatFunc X = n.mx * RatFunc(s.X), Y = n.my * RatFunc(s.Y), Z = n.mz * RatFunc(s.Z);
  // Clear denominators and common factors.
  Poly den = X.den();
  for (const RatFunc* f : {&Y, &Z}) den = den * f->den() / gcd(den, f->den());
  X *= RatFunc(den);
  Y *= RatFunc(den);
  Z *= RatFunc(den);
  Poly g = gcd(gcd(X.num(), Y.num()), Z.num());
  if (!g.is_constant()) {
    X /= RatFunc(g);
    Y /= RatFunc(g);
    Z /= RatFunc(g);
  }
  if (!legendre_check(A, B, C, X, Y, Z)) throw std::logic_error("Legendre solution failed verification");
  return {X, Y, Z, t, std::move(method)};
}

using Method = std::function<PolyTriple(const Normalized&, TowerPtr&)>;

LegendreSolution run(const RatFunc& A0, const RatFunc& B0, const RatFunc& C0, const TowerPtr& tower,
                     const std::vector<std::pair<std::string, Method>>& methods) {
  RatFunc A = A0, B = B0, C = C0;
  TowerPtr base = input_tower(tower, A, B, C);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      Normalized n = normalize(A, B, C);
      std::string last_error;
      for (const auto& [name, method] : methods) {
        TowerPtr t = base;
        try {
          PolyTriple s = method(n, t);
          return finish(A, B, C, n, s, t, name);
        } catch (const UnsupportedSplitting& e) {
          last_error = e.what();
        }
      }
      throw UnsupportedSplitting(last_error);
    } catch (const ConductorRequest& r) {
      TowerEmbedding e = rebase_tower(base, r.conductor());
      A = A.map(e);
      B = B.map(e);
      C = C.map(e);
      base = e.target;
    }
  }
  throw UnsupportedSplitting("cyclotomic conductor search did not settle");
}

}  // namespace

bool legendre_check(const RatFunc& A, const RatFunc& B, const RatFunc& C, const RatFunc& X, const RatFunc& Y,
                    const RatFunc& Z) {
  if (X.is_zero() && Y.is_zero() && Z.is_zero()) return false;
  return (A * X * X + B * Y * Y + C * Z * Z).is_zero();
}

LegendreSolution legendre_solve(const RatFunc& A, const RatFunc& B, const RatFunc& C, const TowerPtr& tower) {
  return run(A, B, C, tower, {{"lattice", solve_lattice}, {"descent", solve_descent}});
}

LegendreSolution legendre_descent(const RatFunc& A, const RatFunc& B, const RatFunc& C, const TowerPtr& tower) {
  return run(A, B, C, tower, {{"descent", solve_descent}});
}

LegendreSolution legendre_lattice(const RatFunc& A, const RatFunc& B, const RatFunc& C, const TowerPtr& tower) {
  return run(A, B, C, tower, {{"lattice", solve_lattice}});
}

LegendreSolution legendre_solve_q(const RatFunc& A, const RatFunc& B, const RatFunc& C, const TowerPtr& tower) {
  auto at = q_to_t(A), bt = q_to_t(B), ct = q_to_t(C);
  if (!at || !bt || !ct) return legendre_solve(A, B, C, tower);
  LegendreSolution s = legendre_solve(*at, *bt, *ct, tower);
  s.X = t_to_q(s.X);
  s.Y = t_to_q(s.Y);
  s.Z = t_to_q(s.Z);
  if (!legendre_check(A, B, C, s.X, s.Y, s.Z)) throw std::logic_error("Legendre solution failed verification in q");
  return s;
}

}  // namespace qcliff
