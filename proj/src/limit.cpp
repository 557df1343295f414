#include "qcliff/limit.hpp"

#include "qcliff/characters.hpp"
#include "qcliff/qnumbers.hpp"

#include <stdexcept>

namespace qcliff {

bool LimitReport::all_pass() const {
  return failures() == 0 && dim_quantum == dim_classical && (!character_ratio || character_ratio->consistent());
}

std::size_t LimitReport::failures() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += !e.pass;
  return k;
}

LimitReport limit_structure_constants(const Weight& w) {
  if (w.n() > 8) throw std::invalid_argument("limit_structure_constants supports n <= 8");
  LimitReport r;
  r.lambda = w;
  const QuadSpace quantum = QuadSpace::from_weight(w), classical = QuadSpace::classical(w);
  const std::size_t n = w.n();
  const Subset full = Subset(1) << n;
  for (Subset s = 0; s < full; ++s)
    for (Subset t = 0; t < full; ++t) {
      LimitEntry e;
      e.s = s;
      e.t = t;
      CliffElem pq = cliff_mul(CliffElem::basis(n, s), CliffElem::basis(n, t), quantum);
      CliffElem pc = cliff_mul(CliffElem::basis(n, s), CliffElem::basis(n, t), classical);
      CliffElem at_one(n);
      try {
        for (const auto& [u, c] : pq.terms()) at_one.add(u, RatFunc(eval_at_one(c)));
        e.pass = at_one == pc;
        e.quantum_at_one = at_one.str();
      } catch (const std::domain_error&) {
        e.pass = false;
        e.quantum_at_one = "pole at q = 1 in " + pq.str();
      }
      e.classical = pc.str();
      r.entries.push_back(std::move(e));
    }
  // Both algebras have the monomials t_S as a basis.
  r.dim_quantum = r.dim_classical = std::size_t(full);
  if (w.q_dominant() && w.in_p_geq0()) r.character_ratio = character_ratio_check(w);
  return r;
}

CharacterRatio character_ratio_check(const Weight& w) {
  CharacterRatio r;
  Classification c = classify_simples(w);
  mpz_class quantum = c.dim_even + c.dim_odd;
  mpz_class classical = dim_v(w);
  if (quantum % classical != 0) throw std::logic_error("Clifford dimensions are not commensurable");
  r.clifford_route = static_cast<int>(mpz_class(quantum / classical).get_si());
  const std::size_t s = w.size_nonzero();
  r.case_route = s > 0 && s % 2 == 0 && !discriminant_square_by_squarefree(w) ? 2 : 1;
  return r;
}

namespace {

RatFunc qpow(long k) { return RatFunc::laurent(FieldElement(1), k); }

}  // namespace

std::vector<GadgetRow> gadget_identity_suite(long range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  std::vector<GadgetRow> rows;
  const RatFunc q = qpow(1), one(1);
  for (long m = -range; m <= range; ++m) {
    const auto [bracket0, shift0] = gadget_values(m, 0);
    for (long n = -range; n <= range; ++n) {
      GadgetRow row;
      row.m = m;
      row.n = n;
      const RatFunc shifted = gadget_values(m, n).second;
      row.shift = shifted == qpow(n) * shift0 + (qpow(n) - one) / (q - one);
      row.bracket = bracket0 == q * (q - one) / (q * q - one) * (one + qpow(-m)) * shift0;
      rows.push_back(row);
    }
  }
  return rows;
}

KbarRow kbar_square_chain(long m) {
  KbarRow r;
  r.m = m;
  const RatFunc q = qpow(1), one(1);
  const RatFunc lam = lambda_cap(m);
  // [q^{2m}; 0]_{q^2}: the bracket at q^h = q^m, then q -> q^2.
  const RatFunc bracket_sq = substitute_power(gadget_values(m, 0).first, 2);
  // (q^{2m}; 0)_q
  const RatFunc shift = gadget_values(2 * m, 0).second;
  const RatFunc rhs = qpow(2) * (q * q - one) / (qpow(4) - one) * (one + qpow(-2 * m)) / (q + one) * shift;
  r.value = lam.str("q");
  r.pass = lam == bracket_sq && bracket_sq == rhs && eval_at_one(lam) == FieldElement(m);
  return r;
}

}  // namespace qcliff
