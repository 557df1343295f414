#pragma once

// Test helpers: a numeric embedding of tower elements into C (each radical
// is sent to the principal square root of its radicand's image, which is a
// ring homomorphism) and deterministic random samples.

#include "qcliff/ratfunc.hpp"

#include <complex>
#include <random>

namespace qtest {

using cplx = std::complex<long double>;

inline cplx level_value(const qcliff::Tower* t, const qcliff::Coeffs& c, std::size_t from, std::size_t len) {
  if (t->depth() == 0) {
    const long double tau = 2.0L * std::acos(-1.0L);
    cplx s = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (c[from + k] == 0) continue;
      const long double a = tau * static_cast<long double>(k) / t->conductor();
      s += static_cast<long double>(c[from + k].get_d()) * cplx(std::cos(a), std::sin(a));
    }
    return s;
  }
  const qcliff::Tower* p = t->parent().get();
  const cplx r = std::sqrt(level_value(p, t->radicand(), 0, t->radicand().size()));
  return level_value(p, c, from, len / 2) + level_value(p, c, from + len / 2, len / 2) * r;
}

inline cplx numeric(const qcliff::FieldElement& x) {
  return level_value(x.tower().get(), x.coords(), 0, x.coords().size());
}

inline bool close(cplx a, cplx b, long double tol = 1e-9L) { return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b)); }

/// Random element with small integer coordinates.
inline qcliff::FieldElement random_element(std::mt19937& rng, const qcliff::TowerPtr& t, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  qcliff::Coeffs c(t->degree());
  for (auto& x : c) x = d(rng);
  return qcliff::FieldElement(t, c);
}

inline qcliff::Poly random_poly(std::mt19937& rng, int degree, int bound = 4) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<qcliff::FieldElement> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(d(rng));
  if (c.back().is_zero()) c.back() = qcliff::FieldElement(1);
  return qcliff::Poly(c);
}

/// The tower Q(i, √2, ⁴√2) with its radicals.
struct Quartic {
  qcliff::TowerPtr tower;
  qcliff::FieldElement s2, s4, i;
};
inline Quartic quartic() {
  auto r2 = qcliff::tower_adjoin_sqrt(qcliff::Tower::base(), qcliff::FieldElement(2));
  auto r4 = qcliff::tower_adjoin_sqrt(r2.tower, r2.root);
  return {r4.tower, r2.root.lifted(r4.tower), r4.root, qcliff::FieldElement::imag_unit(r4.tower)};
}

}  // namespace qtest
