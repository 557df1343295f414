#include "qcliff/qnumbers.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace qcliff {

namespace {

// Laurent polynomial from exponent -> coefficient.
RatFunc from_terms(const std::map<long, FieldElement>& terms) {
  if (terms.empty()) return RatFunc();
  const long lo = std::min(0L, terms.begin()->first);
  std::vector<FieldElement> c(static_cast<std::size_t>(terms.rbegin()->first - lo + 1));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] += v;
  return RatFunc(Poly(std::move(c)), Poly::monomial(FieldElement(1), static_cast<std::size_t>(-lo)));
}

// Exponent -> coefficient of a Laurent polynomial.
std::map<long, FieldElement> terms_of(const RatFunc& f) {
  if (!f.is_laurent()) throw std::logic_error("not a Laurent polynomial");
  std::map<long, FieldElement> out;
  const long shift = f.den().degree();
  const auto& c = f.num().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out.emplace(static_cast<long>(k) - shift, c[k]);
  return out;
}

}  // namespace

RatFunc q_int(long n) {
  std::map<long, FieldElement> terms;
  const long a = std::labs(n);
  for (long j = 0; j < a; ++j) terms.emplace(a - 1 - 2 * j, FieldElement(n > 0 ? 1 : -1));
  return from_terms(terms);
}

RatFunc lambda_cap(long m) {
  std::map<long, FieldElement> terms;
  const long a = std::labs(m);
  for (long j = 0; j < a; ++j) terms.emplace(2 * (a - 1 - 2 * j), FieldElement(m > 0 ? 1 : -1));
  return from_terms(terms);
}

Poly lambda_cap_t(long m) {
  const long a = std::labs(m);
  Poly prev, cur(1);
  if (a == 0) return Poly();
  for (long k = 1; k < a; ++k) {
    Poly next = Poly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return m > 0 ? cur : -cur;
}

std::pair<RatFunc, RatFunc> gadget_values(long m, long n) {
  const long s = m + n;
  RatFunc bracket = q_int(s);
  RatFunc paren = (RatFunc::laurent(FieldElement(1), s) - RatFunc(1)) / RatFunc(Poly::x() - Poly(1));
  return {bracket, paren};
}

FieldElement eval_at_one(const RatFunc& f) {
  try {
    return f.eval(FieldElement(1));
  } catch (const std::domain_error&) {
    throw std::domain_error("pole at q = 1: " + f.str());
  }
}

RatFunc substitute_power(const RatFunc& f, long k) { return f.compose(RatFunc::laurent(FieldElement(1), k)); }

RatFunc t_to_q(const RatFunc& f) {
  static const RatFunc t_of_q = RatFunc::laurent(FieldElement(1), 2) + RatFunc::laurent(FieldElement(1), -2);
  return f.compose(t_of_q);
}

std::optional<RatFunc> q_to_t(const RatFunc& f) {
  if (substitute_power(f, -1) != f) return std::nullopt;
  const RatFunc neg_q = RatFunc(-Poly::x());
  if (f.compose(neg_q) != f) return std::nullopt;
  if (f.is_zero()) return RatFunc();

  // Multiply through by the orbit product of the denominator.
  RatFunc d(f.den());
  RatFunc p = d * d.compose(neg_q) * substitute_power(d, -1) * substitute_power(d, -1).compose(neg_q);
  auto to_t = [](const RatFunc& l) {
    auto terms = terms_of(l);
    Poly out;
    while (!terms.empty()) {
      auto [e, c] = *terms.rbegin();
      if (e < 0 || e % 2 != 0) throw std::logic_error("Laurent polynomial is not a polynomial in t");
      const long deg = e / 2;
      out += Poly::monomial(c, static_cast<std::size_t>(deg));
      // subtract c * (q^2 + q^-2)^deg
      for (long j = 0; j <= deg; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(deg), static_cast<unsigned long>(j));
        long ex = 2 * (deg - j) - 2 * j;
        auto it = terms.find(ex);
        FieldElement v = c * FieldElement(mpq_class(binom));
        if (it == terms.end()) terms.emplace(ex, -v);
        else {
          it->second -= v;
          if (it->second.is_zero()) terms.erase(it);
        }
      }
    }
    return out;
  };
  Poly num = to_t(f * p);
  Poly den = to_t(p);
  return RatFunc(num, den);
}

}  // namespace qcliff
