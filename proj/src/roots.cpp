#include "qcliff/roots.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qcliff {

namespace {

Poly cyclotomic_poly(unsigned d) {
  const auto& c = cyclotomic_polynomial(d);
  return Poly::from_rationals(std::vector<mpq_class>(c.begin(), c.end()));
}

struct Finder {
  TowerPtr tower;
  std::vector<FieldElement> roots;

  void add(const FieldElement& z) {
    if (!z.is_rational()) tower = join(tower, z.tower());
    roots.push_back(z);
  }

  void solve_low_degree(const Poly& g) {
    if (g.degree() == 1) {
      add(-g.coeff(0) / g.coeff(1));
      return;
    }
    const FieldElement a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    FieldElement disc = b * b - FieldElement(4) * a * c;
    auto adj = tower_adjoin_sqrt(tower, disc);
    tower = adj.tower;
    const FieldElement two_a = FieldElement(2) * a;
    add((-b + adj.root) / two_a);
    add((-b - adj.root) / two_a);
  }

  void solve_cyclotomic(const Poly& g, unsigned d, bool real) {
    if (g.degree() <= 2) {
      solve_low_degree(g);
      return;
    }
    const unsigned N = tower->conductor();
    if (N % d != 0) throw ConductorRequest(std::lcm(N, d));
    long found = 0;
    for (unsigned k = 1; k <= d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      if (real && 2 * k > d) continue;
      FieldElement z = FieldElement::root_of_unity(d, k, tower);
      if (real) z += FieldElement::root_of_unity(d, -long(k), tower);
      if (g.eval(z).is_zero()) {
        add(z);
        ++found;
      }
    }
    if (found != g.degree()) throw std::logic_error("cyclotomic root count mismatch");
  }

  // Splits off rational roots of a polynomial with rational coefficients.
  Poly strip_rational_roots(Poly p) {
    for (const auto& c : p.coeffs())
      if (!c.is_rational()) return p;
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, mpz_class(c.rational_value().get_den()));
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs()) ic.push_back(mpq_class(c.rational_value() * den).get_num());
    auto divisors = [](mpz_class v) {
      std::vector<mpz_class> out;
      v = abs(v);
      if (v > 1000000) return out;
      for (unsigned long k = 1; k <= v.get_ui(); ++k)
        if (v.get_ui() % k == 0) out.emplace_back(k);
      return out;
    };
    auto num = divisors(ic.front()), dens = divisors(ic.back());
    for (const auto& pn : num)
      for (const auto& qd : dens)
        for (int sgn : {1, -1}) {
          mpq_class r(pn * sgn, qd);
          r.canonicalize();
          FieldElement z(r);
          if (p.degree() >= 1 && p.eval(z).is_zero()) {
            add(z);
            p = p / (Poly::x() - Poly(z));
          }
        }
    return p;
  }

  void run(Poly p) {
    if (p.is_constant()) return;
    if (p.coeff(0).is_zero()) {
      add(FieldElement(0));
      p = p.shift(-1);
    }
    if (p.degree() <= 0) return;
    const long deg = p.degree();
    for (unsigned d = 1; p.degree() > 0 && d <= static_cast<unsigned>(2 * deg * deg + 6); ++d) {
      const unsigned phi = euler_phi(d);
      if (phi <= static_cast<unsigned>(p.degree())) {
        Poly g = gcd(p, cyclotomic_poly(d));
        if (!g.is_constant()) {
          solve_cyclotomic(g, d, false);
          p = p / g;
        }
      }
      if (p.degree() > 0 && (d <= 2 || phi / 2 <= static_cast<unsigned>(p.degree()))) {
        Poly g = gcd(p, real_cyclotomic_polynomial(d));
        if (!g.is_constant()) {
          if (d <= 2) solve_low_degree(g);
          else solve_cyclotomic(g, d, true);
          p = p / g;
        }
      }
    }
    if (p.degree() <= 0) return;
    if (p.degree() > 2) p = strip_rational_roots(p);
    if (p.degree() <= 0) return;
    if (p.degree() <= 2) {
      solve_low_degree(p);
      return;
    }
    bool even = true;
    for (std::size_t k = 1; k < p.coeffs().size(); k += 2)
      if (!p.coeffs()[k].is_zero()) even = false;
    if (!even) throw UnsupportedSplitting("cannot split polynomial of degree " + std::to_string(p.degree()) + ": " + p.str("x"));
    std::vector<FieldElement> half;
    for (std::size_t k = 0; k < p.coeffs().size(); k += 2) half.push_back(p.coeffs()[k]);
    RootSet inner = find_roots(Poly(half), tower);
    tower = inner.tower;
    for (const auto& u : inner.roots) {
      auto adj = tower_adjoin_sqrt(tower, u);
      tower = adj.tower;
      add(adj.root);
      add(-adj.root);
    }
  }
};

}  // namespace

const Poly& real_cyclotomic_polynomial(unsigned d) {
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  Poly out;
  if (d == 1) {
    out = Poly::x() - Poly(2);
  } else if (d == 2) {
    out = Poly::x() + Poly(2);
  } else {
    // y^{-h} Phi_d(y) written in x = y + 1/y by peeling off the top power.
    const auto& c = cyclotomic_polynomial(d);
    const long h = static_cast<long>(c.size() - 1) / 2;
    std::map<long, mpq_class> terms;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) terms[static_cast<long>(k) - h] = c[k];
    std::vector<mpq_class> res(static_cast<std::size_t>(h + 1));
    while (!terms.empty()) {
      auto [e, v] = *terms.rbegin();
      res[static_cast<std::size_t>(e)] = v;
      for (long j = 0; j <= e; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(j));
        auto& slot = terms[e - 2 * j];
        slot -= v * binom;
        if (slot == 0) terms.erase(e - 2 * j);
      }
    }
    out = Poly::from_rationals(res);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(out)).first->second;
}

RootSet find_roots(const Poly& p, const TowerPtr& tower) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  Finder f{absorb(tower, p), {}};
  Poly sq = p;
  if (!p.is_constant()) sq = p / gcd(p, p.derivative());
  f.run(sq.monic());
  for (auto& z : f.roots) z = z.lifted(f.tower);
  return {f.tower, std::move(f.roots)};
}

ResidueResult quadratic_residue_mod(const Poly& R, const Poly& S, const TowerPtr& tower) {
  if (S.is_constant()) return {Poly(), tower};
  if (!is_squarefree(S)) throw std::invalid_argument("modulus must be square-free");
  RootSet rs = find_roots(S, absorb(tower, R));
  TowerPtr t = rs.tower;
  std::vector<FieldElement> ys;
  for (const auto& z : rs.roots) {
    FieldElement v = R.eval(z.lifted(t));
    if (v.is_zero()) {
      ys.push_back(FieldElement::zero(t));
      continue;
    }
    auto adj = tower_adjoin_sqrt(t, v);
    t = adj.tower;
    ys.push_back(adj.root);
  }
  // Lagrange interpolation through (z_k, y_k).
  Poly y;
  const std::size_t m = rs.roots.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (ys[k].is_zero()) continue;
    Poly basis(1);
    FieldElement denom = FieldElement::one(t);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      basis *= Poly::x() - Poly(rs.roots[j].lifted(t));
      denom *= rs.roots[k].lifted(t) - rs.roots[j].lifted(t);
    }
    y += basis * (ys[k].lifted(t) / denom);
  }
  if (!((y * y - R) % S).is_zero()) throw std::logic_error("quadratic residue verification failed");
  return {y, t};
}

}  // namespace qcliff
