#include "qcliff/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcliff {

CharacterPoly CharacterPoly::monomial(const Exponent& doubled, const mpz_class& c) {
  CharacterPoly p(doubled.size());
  p.add(doubled, c);
  return p;
}

mpz_class CharacterPoly::coeff_doubled(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class CharacterPoly::coeff(const std::vector<long>& mu) const {
  Exponent e(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) e[i] = 2 * mu[i];
  return coeff_doubled(e);
}

CharacterPoly& CharacterPoly::add(const Exponent& e, const mpz_class& c) {
  if (e.size() != n_) throw std::invalid_argument("exponent of wrong length");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

CharacterPoly operator+(const CharacterPoly& a, const CharacterPoly& b) {
  CharacterPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

CharacterPoly operator-(const CharacterPoly& a, const CharacterPoly& b) {
  CharacterPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, -c);
  return r;
}

CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("characters in different ranks");
  CharacterPoly r(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

CharacterPoly operator*(const mpz_class& c, const CharacterPoly& a) {
  CharacterPoly r(a.n_);
  for (const auto& [e, v] : a.terms_) r.add(e, c * v);
  return r;
}

CharacterPoly CharacterPoly::permuted(const std::vector<std::size_t>& perm) const {
  CharacterPoly r(n_);
  Exponent f(n_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < n_; ++i) f[perm[i]] = e[i];
    r.add(f, c);
  }
  return r;
}

bool CharacterPoly::is_symmetric() const {
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    std::vector<std::size_t> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(permuted(perm) == *this)) return false;
  }
  return true;
}

bool CharacterPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool CharacterPoly::integral_exponents() const {
  for (const auto& [e, c] : terms_)
    for (long x : e)
      if (x % 2) return false;
  return true;
}

mpz_class CharacterPoly::total() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

namespace {

std::string half(long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

void write_coeff(std::ostringstream& os, const mpz_class& c, bool first, bool bare) {
  mpz_class a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (bare) os << a.get_str();
  else if (a != 1) os << a.get_str() << "·";
}

}  // namespace

std::string CharacterPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "·";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 2) mono += e[i] % 2 || e[i] < 0 ? "^(" + half(e[i]) + ")" : "^" + half(e[i]);
    }
    write_coeff(os, c, first, mono.empty());
    os << mono;
    first = false;
  }
  return os.str();
}

std::string CharacterPoly::str_symmetric() const {
  if (!is_symmetric()) throw std::logic_error("str_symmetric on a non-symmetric character");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!std::is_sorted(e.begin(), e.end(), std::greater<long>())) continue;
    write_coeff(os, c, first, false);
    os << "m(";
    for (std::size_t i = 0; i < n_; ++i) os << (i ? "," : "") << half(e[i]);
    os << ")";
    first = false;
  }
  return os.str();
}

CharacterPoly exact_divide(const CharacterPoly& a, const CharacterPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero character");
  if (a.n() != b.n()) throw std::invalid_argument("characters in different ranks");
  const std::size_t n = a.n();
  CharacterPoly q(n);
  if (a.is_zero()) return q;
  // Quotient exponents lie in a box determined by the supports.
  auto bounds = [n](const CharacterPoly& p) {
    Exponent mn = p.terms().begin()->first, mx = mn;
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < n; ++i) {
        mn[i] = std::min(mn[i], e[i]);
        mx[i] = std::max(mx[i], e[i]);
      }
    return std::make_pair(mn, mx);
  };
  const auto [amin, amax] = bounds(a);
  const auto [bmin, bmax] = bounds(b);
  Exponent lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = amin[i] - bmax[i];
    hi[i] = amax[i] - bmin[i];
  }
  const auto& [blead, bc] = *b.terms().rbegin();
  CharacterPoly r = a;
  Exponent mu(n);
  while (!r.is_zero()) {
    const auto& [rlead, rc] = *r.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      mu[i] = rlead[i] - blead[i];
      if (mu[i] < lo[i] || mu[i] > hi[i]) throw NonExactDivision("division by the Weyl denominator is not exact");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), bc.get_mpz_t())) throw NonExactDivision("non-integral quotient coefficient");
    mpz_class c = rc / bc;
    q.add(mu, c);
    r = r - c * (CharacterPoly::monomial(mu) * b);
  }
  return q;
}

Exponent rho0(std::size_t n) {
  if (n < 1) throw std::invalid_argument("rho0 needs n >= 1");
  Exponent r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<long>(n) - 1 - 2 * static_cast<long>(i);
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> typical_roots(const Weight& w) {
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i < w.n(); ++i)
    for (std::size_t j = i + 1; j < w.n(); ++j)
      if (w.v[i] + w.v[j] != 0) r.emplace_back(i, j);
  return r;
}

namespace {

// Σ_w sgn(w) w(f)
CharacterPoly alternate(const CharacterPoly& f) {
  const std::size_t n = f.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CharacterPoly sum(n);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    CharacterPoly p = f.permuted(perm);
    sum = inversions % 2 ? sum - p : sum + p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

CharacterPoly weyl_denominator(std::size_t n) { return alternate(CharacterPoly::monomial(rho0(n))); }

CharacterPoly weyl_denominator_product(std::size_t n) {
  CharacterPoly p = CharacterPoly::monomial(Exponent(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Exponent a(n, 0), b(n, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = -1;
      b[j] = 1;
      p = p * (CharacterPoly::monomial(a) - CharacterPoly::monomial(b));
    }
  return p;
}

mpz_class dim_v(const Weight& w) {
  const std::size_t s = w.size_nonzero();
  if (s == 0) return 1;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, (s - 1) / 2 + 1);
  return r;
}

CharacterPoly sergeev_character(const Weight& w, bool check_domain) {
  const std::size_t n = w.n();
  if (n == 0) throw std::invalid_argument("empty weight");
  if (check_domain && !(w.q_dominant() && w.in_p_geq0()))
    throw PreconditionError("weight " + w.str() + " is not q-dominant in P>=0");
  if (n > 8) throw std::invalid_argument("character computation supports n <= 8");
  Exponent top = rho0(n);
  for (std::size_t i = 0; i < n; ++i) top[i] += 2 * w.v[i];
  CharacterPoly f = CharacterPoly::monomial(top);
  for (const auto& [i, j] : typical_roots(w)) {
    Exponent neg(n, 0);
    neg[i] = -2;
    neg[j] = 2;
    f = f * (CharacterPoly::monomial(Exponent(n, 0)) + CharacterPoly::monomial(neg));
  }
  CharacterPoly q = exact_divide(alternate(f), weyl_denominator(n));
  if (!q.integral_exponents()) throw NonExactDivision("quotient has half-integer exponents");
  return dim_v(w) * q;
}

CharacterPoly ch_vq(const Weight& w) {
  CharacterPoly ch = sergeev_character(w);
  Classification c = classify_simples(w);
  const bool doubled = c.size_nonzero > 0 && c.size_nonzero % 2 == 0 && !c.discriminant_square;
  return doubled ? mpz_class(2) * ch : ch;
}

std::string DeltaSymbol::str() const {
  if (mult.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const auto& [m, k] = *it;
    if (first) os << (k < 0 ? "-" : "");
    else os << (k < 0 ? " - " : " + ");
    if (std::labs(k) != 1) os << std::labs(k);
    os << "δ" << m;
    first = false;
  }
  return os.str();
}

DeltaSymbol delta_symbol(const Weight& w) {
  DeltaSymbol d;
  for (long x : w.v) {
    if (x == 0) continue;
    long& k = d.mult[std::labs(x)];
    k += x > 0 ? 1 : -1;
    if (k == 0) d.mult.erase(std::labs(x));
  }
  return d;
}

bool central_char_equal(const Weight& a, const Weight& b) { return delta_symbol(a) == delta_symbol(b); }

Dominance dominance(const Weight& w) { return {w.gl_dominant(), w.q_dominant(), w.in_p_geq0()}; }

}  // namespace qcliff
