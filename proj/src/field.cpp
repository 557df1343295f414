#include "qcliff/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qcliff {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool all_zero(const Coeffs& c, std::size_t from, std::size_t to) {
  for (std::size_t k = from; k < to; ++k)
    if (c[k] != 0) return false;
  return true;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& a) {
  if (a < 0) return std::nullopt;
  if (a == 0) return mpq_class(0);
  mpz_class n = a.get_num(), d = a.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

// --- cyclotomic base Q(zeta_N) -------------------------------------------

Coeffs base_mul(unsigned N, const Coeffs& a, const Coeffs& b) {
  const std::size_t phi = a.size();
  if (N == 4) {
    Coeffs r(2);
    r[0] = a[0] * b[0] - a[1] * b[1];
    r[1] = a[0] * b[1] + a[1] * b[0];
    return r;
  }
  Coeffs prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  const auto& cyc = cyclotomic_polynomial(N);
  for (std::size_t k = prod.size(); k-- > phi;) {
    if (prod[k] == 0) continue;
    mpq_class c = prod[k];
    for (std::size_t j = 0; j <= phi; ++j)
      if (cyc[j] != 0) prod[k - phi + j] -= c * cyc[j];
  }
  prod.resize(phi);
  return prod;
}

// Quotient and remainder over Q.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    mpq_class c = a[k] / b.back();
    q[k - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  return {q, a};
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Coeffs base_inv(unsigned N, const Coeffs& a) {
  const std::size_t phi = a.size();
  if (N == 4) {
    mpq_class n = a[0] * a[0] + a[1] * a[1];
    return Coeffs{a[0] / n, -a[1] / n};
  }
  // Extended Euclid: find u with u*a == 1 mod Phi_N.
  QPoly r0, r1(a.begin(), a.end());
  for (const auto& c : cyclotomic_polynomial(N)) r0.emplace_back(c);
  trim(r1);
  QPoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = qpoly_divmod(r0, r1);
    QPoly s = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant.
  Coeffs out(phi);
  for (std::size_t i = 0; i < s0.size() && i < phi; ++i) out[i] = s0[i] / r0[0];
  return out;
}

// Primes p == 1 (mod N) give N distinct N-th roots of unity mod p; a square
// in Q(zeta_N) must be a quadratic residue at each of them.
using u64 = std::uint64_t;
u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((__uint128_t)a * b % m); }
u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
u64 to_mod(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

// Certifies that integer-coefficient y is not a square in Q(zeta_N).
bool certify_nonsquare(unsigned N, const std::vector<mpz_class>& y) {
  std::vector<unsigned> prime_factors;
  for (unsigned d = 2, m = N; d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  int tried = 0;
  for (u64 p = N + 1; tried < 40; p += N) {
    if (!is_prime(p)) continue;
    ++tried;
    u64 r = 0;
    for (u64 a = 2; a < p; ++a) {
      u64 c = powmod(a, (p - 1) / N, p);
      bool primitive = true;
      for (unsigned l : prime_factors)
        if (powmod(c, N / l, p) == 1) primitive = false;
      if (primitive) {
        r = c;
        break;
      }
    }
    for (unsigned k = 1; k < N; ++k) {
      if (std::gcd(k, N) != 1) continue;
      u64 rk = powmod(r, k, p), x = 1, val = 0;
      for (const auto& c : y) {
        val = (val + mulmod(to_mod(c, p), x, p)) % p;
        x = mulmod(x, rk, p);
      }
      if (val != 0 && powmod(val, (p - 1) / 2, p) == p - 1) return true;
    }
  }
  return false;
}

long ramanujan_sum(unsigned N, long a) {
  // sum over k in (Z/N)^* of zeta^{ak}
  unsigned g = std::gcd(static_cast<unsigned>(((a % long(N)) + N) % N), N);
  unsigned m = N / g;
  // mu(m) * phi(N) / phi(m)
  int mu = 1;
  unsigned t = m;
  for (unsigned d = 2; d <= t; ++d)
    if (t % d == 0) {
      t /= d;
      if (t % d == 0) return 0;
      mu = -mu;
    }
  return mu * long(euler_phi(N) / euler_phi(m));
}

std::optional<Coeffs> base_sqrt_general(unsigned N, const Coeffs& x) {
  const std::size_t phi = x.size();
  mpz_class den = 1;
  for (const auto& c : x) den = lcm(den, mpz_class(c.get_den()));
  // Y = den^2 x is integral and S = den * sqrt(x) is an algebraic integer.
  std::vector<mpz_class> y(phi);
  for (std::size_t j = 0; j < phi; ++j) {
    mpq_class v = x[j] * den * den;
    y[j] = v.get_num();
  }
  if (certify_nonsquare(N, y)) return std::nullopt;

  std::vector<unsigned> reps;
  for (unsigned k = 1; k < N; ++k)
    if (std::gcd(k, N) == 1 && k < N - k) reps.push_back(k);
  if (reps.size() > 18) throw UnsupportedSplitting("square root in Q(zeta_" + std::to_string(N) + ") too large");

  using cplx = std::complex<long double>;
  const long double tau = 2.0L * std::acos(-1.0L);
  auto zeta = [&](long e) {
    long double a = tau * static_cast<long double>(((e % long(N)) + N) % N) / N;
    return cplx(std::cos(a), std::sin(a));
  };
  // Trace-form Gram matrix G_{mj} = Tr(zeta^{j-m}) and its exact inverse.
  std::vector<std::vector<mpq_class>> G(phi, std::vector<mpq_class>(2 * phi));
  for (std::size_t m = 0; m < phi; ++m) {
    for (std::size_t j = 0; j < phi; ++j) G[m][j] = ramanujan_sum(N, long(j) - long(m));
    G[m][phi + m] = 1;
  }
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t piv = c;
    while (G[piv][c] == 0) ++piv;
    std::swap(G[piv], G[c]);
    mpq_class inv = 1 / G[c][c];
    for (auto& v : G[c]) v *= inv;
    for (std::size_t r = 0; r < phi; ++r)
      if (r != c && G[r][c] != 0) {
        mpq_class f = G[r][c];
        for (std::size_t k = 0; k < 2 * phi; ++k) G[r][k] -= f * G[c][k];
      }
  }
  std::vector<std::vector<long double>> Ginv(phi, std::vector<long double>(phi));
  for (std::size_t m = 0; m < phi; ++m)
    for (std::size_t j = 0; j < phi; ++j) Ginv[m][j] = G[m][phi + j].get_d();

  // Contribution of representative k to the trace vector t_m = Tr(zeta^{-m} S).
  std::vector<std::vector<long double>> contrib;
  for (unsigned k : reps) {
    cplx yk = 0;
    for (std::size_t j = 0; j < phi; ++j) yk += static_cast<long double>(y[j].get_d()) * zeta(long(j) * k);
    cplx zk = std::sqrt(yk);
    std::vector<long double> tvec(phi);
    for (std::size_t m = 0; m < phi; ++m) tvec[m] = 2.0L * (zk * zeta(-long(m) * long(k))).real();
    std::vector<long double> cvec(phi, 0.0L);
    for (std::size_t j = 0; j < phi; ++j)
      for (std::size_t m = 0; m < phi; ++m) cvec[j] += Ginv[j][m] * tvec[m];
    contrib.push_back(std::move(cvec));
  }
  const std::size_t R = reps.size();
  std::vector<long double> cur(phi, 0.0L);
  for (const auto& v : contrib)
    for (std::size_t j = 0; j < phi; ++j) cur[j] += v[j];
  std::vector<int> sign(R, 1);
  const std::size_t patterns = std::size_t(1) << (R - 1);
  for (std::size_t g = 0; g < patterns; ++g) {
    if (g > 0) {
      // Gray code: flip the bit that changes between g-1 and g (never bit 0 of the
      // representatives, which fixes the overall sign).
      std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(g)) + 1;
      sign[bit] = -sign[bit];
      for (std::size_t j = 0; j < phi; ++j) cur[j] += 2.0L * sign[bit] * contrib[bit][j];
    }
    bool near = true;
    Coeffs cand(phi);
    for (std::size_t j = 0; j < phi && near; ++j) {
      long double r = std::round(cur[j]);
      if (std::fabs(cur[j] - r) > 0.25L) near = false;
      cand[j] = mpq_class(mpz_class(std::to_string(static_cast<long long>(r))), den);
    }
    if (!near) continue;
    for (auto& c : cand) c.canonicalize();
    if (base_mul(N, cand, cand) == x) return cand;
  }
  throw UnsupportedSplitting("could not decide squareness in Q(zeta_" + std::to_string(N) + ")");
}

std::optional<Coeffs> base_sqrt(unsigned N, const Coeffs& x) {
  if (all_zero(x, 0, x.size())) return Coeffs(x.size());
  if (N == 4) {
    const mpq_class &a = x[0], &b = x[1];
    if (b == 0) {
      if (auto r = rational_sqrt(a)) return Coeffs{*r, 0};
      if (auto r = rational_sqrt(-a)) return Coeffs{0, *r};
      return std::nullopt;
    }
    auto n = rational_sqrt(a * a + b * b);
    if (!n) return std::nullopt;
    auto u = rational_sqrt((a + *n) / 2);
    if (!u || *u == 0) return std::nullopt;
    return Coeffs{*u, b / (2 * *u)};
  }
  return base_sqrt_general(N, x);
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}
Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  return r;
}
Coeffs half(const Coeffs& a, bool upper) {
  const std::size_t h = a.size() / 2;
  return upper ? Coeffs(a.begin() + h, a.end()) : Coeffs(a.begin(), a.begin() + h);
}
Coeffs concat(Coeffs lo, const Coeffs& hi) {
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

void normalize_sign(Coeffs& c) {
  for (const auto& v : c)
    if (v != 0) {
      if (v < 0)
        for (auto& w : c) w = -w;
      return;
    }
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& c = cyclotomic_polynomial(d);
    QPoly q(c.begin(), c.end());
    p = qpoly_divmod(p, q).first;
  }
  std::vector<mpz_class> out;
  for (auto& c : p) out.push_back(c.get_num());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

class TowerBuilder {
 public:
  static TowerPtr make_base(unsigned N) {
    auto t = std::shared_ptr<Tower>(new Tower());
    t->conductor_ = N;
    t->phi_ = euler_phi(N);
    t->symbol_ = N == 4 ? "i" : "ζ" + std::to_string(N);
    return t;
  }
  static TowerPtr make_child(const TowerPtr& parent, Coeffs radicand, std::string symbol) {
    auto t = std::shared_ptr<Tower>(new Tower());
    t->conductor_ = parent->conductor_;
    t->phi_ = parent->phi_;
    t->depth_ = parent->depth_ + 1;
    t->parent_ = parent;
    t->radicand_ = std::move(radicand);
    t->symbol_ = std::move(symbol);
    return t;
  }
};

TowerPtr Tower::base(unsigned conductor) {
  if (conductor == 0 || conductor % 4 != 0)
    throw std::invalid_argument("cyclotomic conductor must be a positive multiple of 4");
  static std::mutex mu;
  static std::map<unsigned, TowerPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot = TowerBuilder::make_base(conductor);
  return slot;
}

const Tower* Tower::at_depth(std::size_t d) const {
  const Tower* t = this;
  while (t->depth_ > d) t = t->parent_.get();
  return t;
}

bool Tower::is_ancestor_of(const Tower& other) const {
  if (other.depth_ < depth_) return false;
  return other.at_depth(depth_) == this;
}

Coeffs Tower::mul(const Coeffs& a, const Coeffs& b) const {
  if (depth_ == 0) return base_mul(conductor_, a, b);
  const std::size_t h = a.size() / 2;
  const bool a_low = all_zero(a, h, a.size());
  const bool b_low = all_zero(b, h, b.size());
  Coeffs a0 = half(a, false), b0 = half(b, false);
  if (a_low && b_low) return concat(parent_->mul(a0, b0), Coeffs(h));
  if (a_low) return concat(parent_->mul(a0, b0), parent_->mul(a0, half(b, true)));
  Coeffs a1 = half(a, true);
  if (b_low) return concat(parent_->mul(a0, b0), parent_->mul(a1, b0));
  Coeffs b1 = half(b, true);
  Coeffs p0 = parent_->mul(a0, b0);
  Coeffs p1 = parent_->mul(a1, b1);
  Coeffs m = parent_->mul(add(a0, a1), add(b0, b1));
  Coeffs lo = add(p0, parent_->mul(p1, radicand_));
  Coeffs hi = sub(sub(m, p0), p1);
  return concat(std::move(lo), hi);
}

Coeffs Tower::inv(const Coeffs& a) const {
  if (all_zero(a, 0, a.size())) throw std::domain_error("inverse of zero");
  if (depth_ == 0) return base_inv(conductor_, a);
  const std::size_t h = a.size() / 2;
  Coeffs a0 = half(a, false);
  if (all_zero(a, h, a.size())) return concat(parent_->inv(a0), Coeffs(h));
  Coeffs a1 = half(a, true);
  Coeffs norm = sub(parent_->mul(a0, a0), parent_->mul(radicand_, parent_->mul(a1, a1)));
  Coeffs ninv = parent_->inv(norm);
  Coeffs lo = parent_->mul(a0, ninv);
  Coeffs hi = parent_->mul(a1, ninv);
  for (auto& v : hi) v = -v;
  return concat(std::move(lo), hi);
}

std::optional<Coeffs> Tower::sqrt(const Coeffs& a) const {
  std::optional<Coeffs> out;
  if (depth_ == 0) {
    out = base_sqrt(conductor_, a);
  } else {
    const std::size_t h = a.size() / 2;
    Coeffs x = half(a, false);
    if (all_zero(a, h, a.size())) {
      if (auto s = parent_->sqrt(x)) {
        out = concat(*s, Coeffs(h));
      } else if (auto s2 = parent_->sqrt(parent_->mul(x, parent_->inv(radicand_)))) {
        // sqrt(x) = sqrt(x/d) * r
        out = concat(Coeffs(h), *s2);
      }
    } else {
      Coeffs y = half(a, true);
      // (u + v r)^2 = u^2 + d v^2 + 2uv r
      Coeffs norm = sub(parent_->mul(x, x), parent_->mul(radicand_, parent_->mul(y, y)));
      if (auto n = parent_->sqrt(norm)) {
        for (int sgn : {1, -1}) {
          Coeffs u2 = x;
          for (std::size_t k = 0; k < h; ++k) u2[k] = (x[k] + sgn * (*n)[k]) / 2;
          auto u = parent_->sqrt(u2);
          if (!u || all_zero(*u, 0, h)) continue;
          Coeffs two_u = *u;
          for (auto& v : two_u) v *= 2;
          Coeffs v = parent_->mul(y, parent_->inv(two_u));
          Coeffs cand = concat(*u, v);
          if (mul(cand, cand) == a) {
            out = std::move(cand);
            break;
          }
        }
      }
    }
  }
  if (out) normalize_sign(*out);
  return out;
}

TowerPtr join(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  if (a->is_ancestor_of(*b)) return b;
  if (b->is_ancestor_of(*a)) return a;
  throw std::logic_error("field elements live in incompatible towers");
}

// --- FieldElement ------------------------------------------------------------

FieldElement::FieldElement() : FieldElement(mpq_class(0)) {}
FieldElement::FieldElement(long v) : FieldElement(mpq_class(v)) {}
FieldElement::FieldElement(const mpq_class& v, TowerPtr tower) : tower_(std::move(tower)), c_(tower_->degree()) {
  c_[0] = v;
}
FieldElement::FieldElement(TowerPtr tower, Coeffs coords) : tower_(std::move(tower)), c_(std::move(coords)) {
  if (c_.size() != tower_->degree()) throw std::invalid_argument("coordinate vector does not match tower degree");
}

FieldElement FieldElement::root_of_unity(unsigned order, long k, TowerPtr t) {
  const unsigned N = t->conductor();
  if (order == 0 || N % order != 0) throw ConductorRequest(std::lcm(N, order));
  long e = ((k % long(order)) + order) % order * long(N / order);
  // zeta_N^e reduced mod Phi_N
  const std::size_t phi = t->base_degree();
  Coeffs c(t->degree());
  if (std::size_t(e) < phi) {
    c[e] = 1;
    return FieldElement(t, c);
  }
  QPoly mono(e + 1);
  mono[e] = 1;
  const auto& cyc = cyclotomic_polynomial(N);
  QPoly m(cyc.begin(), cyc.end());
  QPoly r = qpoly_divmod(mono, m).second;
  for (std::size_t j = 0; j < r.size(); ++j) c[j] = r[j];
  return FieldElement(t, c);
}

FieldElement FieldElement::radical(const TowerPtr& t) {
  if (t->depth() == 0) throw std::invalid_argument("base field has no radical");
  Coeffs c(t->degree());
  c[t->degree() / 2] = 1;
  return FieldElement(t, c);
}

bool FieldElement::is_zero() const { return all_zero(c_, 0, c_.size()); }
bool FieldElement::is_one() const { return c_[0] == 1 && all_zero(c_, 1, c_.size()); }
bool FieldElement::is_rational() const { return all_zero(c_, 1, c_.size()); }
mpq_class FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return c_[0];
}

FieldElement FieldElement::lifted(const TowerPtr& to) const {
  if (to == tower_) return *this;
  if (is_rational()) return FieldElement(c_[0], to);
  if (!tower_->is_ancestor_of(*to)) throw std::logic_error("cannot lift into a non-extending tower");
  Coeffs c(c_);
  c.resize(to->degree());
  return FieldElement(to, std::move(c));
}

long FieldElement::leading_index() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return long(k);
  return -1;
}
int FieldElement::leading_sign() const {
  long k = leading_index();
  return k < 0 ? 0 : sgn(c_[k]);
}

namespace {
// Brings two operands into a common tower.
TowerPtr common(const FieldElement& a, const FieldElement& b) {
  if (a.tower() == b.tower()) return a.tower();
  if (b.is_rational()) return a.tower();
  if (a.is_rational()) return b.tower();
  return join(a.tower(), b.tower());
}
}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  auto t = common(*this, o);
  if (t != tower_) *this = lifted(t);
  if (o.tower_ == t) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  } else {
    const auto& oc = o.lifted(t).c_;
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += oc[k];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (o.is_rational()) {
    const mpq_class v = o.c_[0];
    for (auto& c : c_) c *= v;
    return *this;
  }
  if (is_rational()) {
    const mpq_class v = c_[0];
    *this = o;
    for (auto& c : c_) c *= v;
    return *this;
  }
  auto t = common(*this, o);
  c_ = t->mul(lifted(t).c_, o.lifted(t).c_);
  tower_ = t;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_rational()) {
    if (c_[0] == 0) throw std::domain_error("inverse of zero");
    return FieldElement(1 / c_[0], tower_);
  }
  return FieldElement(tower_, tower_->inv(c_));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = one(tower_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.tower_ == b.tower_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  auto t = common(a, b);
  return a.lifted(t).c_ == b.lifted(t).c_;
}

std::string FieldElement::str() const {
  // Basis monomial names.
  const std::size_t phi = tower_->base_degree();
  std::vector<std::string> radicals;
  for (std::size_t d = 1; d <= tower_->depth(); ++d) radicals.push_back(tower_->at_depth(d)->symbol());
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string mono;
    std::size_t a = k % phi, mask = k / phi;
    if (a > 0) {
      if (tower_->conductor() == 4)
        mono = "i";
      else
        mono = tower_->at_depth(0)->symbol() + (a > 1 ? "^" + std::to_string(a) : "");
    }
    for (std::size_t j = 0; j < radicals.size(); ++j)
      if (mask >> j & 1) mono += (mono.empty() ? "" : "·") + radicals[j];
    mpq_class v = c_[k];
    const bool neg = v < 0;
    if (neg) v = -v;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (mono.empty()) os << rational_str(v);
    else if (v == 1) os << mono;
    else os << rational_str(v) << "·" << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<FieldElement> sqrt_in_tower(const FieldElement& a) {
  auto s = a.tower()->sqrt(a.coords());
  if (!s) return std::nullopt;
  return FieldElement(a.tower(), std::move(*s));
}

namespace {

// Writes m = s^2 * k with k free of small square factors.
std::pair<mpz_class, mpz_class> split_square(mpz_class m) {
  mpz_class s = 1;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    return {s, 1};
  }
  for (unsigned long p = 2; p < 5000 && p * p <= m; ++p) {
    mpz_class pp = p * p;
    while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
      m /= pp;
      s *= p;
    }
  }
  return {s, m};
}

std::string radical_symbol(const TowerPtr& t, const FieldElement& d) {
  if (d.is_rational()) return "√" + d.rational_value().get_str();
  // A plain earlier radical: sqrt(sqrt(k)) prints as the fourth root.
  long idx = d.leading_index();
  const std::size_t phi = t->base_degree();
  bool single = true;
  for (std::size_t k = idx + 1; k < d.coords().size(); ++k)
    if (d.coords()[k] != 0) single = false;
  if (single && d.coords()[idx] == 1 && std::size_t(idx) % phi == 0) {
    std::size_t mask = std::size_t(idx) / phi;
    if ((mask & (mask - 1)) == 0) {
      std::size_t level = 0;
      while ((std::size_t(1) << level) != mask) ++level;
      const std::string& s = t->at_depth(level + 1)->symbol();
      if (s.rfind("√", 0) == 0 && s.find('(') == std::string::npos) return "⁴" + s;
      if (s.rfind("⁴√", 0) == 0) return "⁸" + s.substr(std::string("⁴").size());
      return "√(" + s + ")";
    }
  }
  return "√(" + d.str() + ")";
}

}  // namespace

AdjoinResult tower_adjoin_sqrt(const TowerPtr& tower, const FieldElement& a_in) {
  if (a_in.is_zero()) throw std::invalid_argument("cannot adjoin the square root of zero");
  TowerPtr t = a_in.is_rational() ? tower : join(tower, a_in.tower());
  FieldElement a = a_in.lifted(t);
  if (auto s = sqrt_in_tower(a)) return {t, *s, false};
  // Normalise the radicand: pull out signs through i and rational squares.
  FieldElement factor = FieldElement::one(t);
  if (a.leading_sign() < 0) {
    a = -a;
    factor = FieldElement::imag_unit(t);
  }
  if (a.is_rational()) {
    mpq_class r = a.rational_value();
    mpz_class m = r.get_num() * r.get_den();
    auto [s, k] = split_square(m);
    factor *= FieldElement(mpq_class(s, r.get_den()), t);
    a = FieldElement(mpq_class(k), t);
    if (auto s2 = sqrt_in_tower(a)) return {t, factor * *s2, false};
  }
  // Equal adjunctions give the same tower object, so independently built
  // values stay compatible.
  static std::mutex mu;
  static std::map<std::pair<const Tower*, std::string>, TowerPtr> children;
  std::string key;
  for (const auto& c : a.coords()) key += c.get_str() + ";";
  TowerPtr child;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = children[{t.get(), key}];
    if (!slot) slot = TowerBuilder::make_child(t, a.coords(), radical_symbol(t, a));
    child = slot;
  }
  return {child, factor.lifted(child) * FieldElement::radical(child), true};
}

TowerEmbedding rebase_tower(const TowerPtr& source, unsigned conductor) {
  if (conductor % source->conductor() != 0) throw std::invalid_argument("conductor must be a multiple");
  TowerEmbedding e;
  e.source = source;
  e.target = Tower::base(conductor);
  for (std::size_t d = 1; d <= source->depth(); ++d) {
    const Tower* node = source->at_depth(d);
    // Embed the radicand with the images found so far.
    TowerEmbedding partial{std::const_pointer_cast<const Tower>(node->parent()), e.target, e.radical_images};
    FieldElement rad = embed(FieldElement(node->parent(), node->radicand()), partial);
    auto res = tower_adjoin_sqrt(e.target, rad);
    e.target = res.tower;
    e.radical_images.push_back(res.root);
  }
  return e;
}

FieldElement embed(const FieldElement& x_in, const TowerEmbedding& e) {
  FieldElement x = x_in.tower()->is_ancestor_of(*e.source) ? x_in.lifted(e.source) : x_in;
  if (x.tower() != e.source && !x.is_rational()) throw std::logic_error("element not in embedding source");
  const unsigned N = e.source->conductor();
  const std::size_t phi = e.source->base_degree();
  FieldElement out = FieldElement::zero(e.target);
  const auto& c = x.coords();
  const std::size_t depth = x.is_rational() ? 0 : e.source->depth();
  const std::size_t size = x.is_rational() ? 1 : c.size();
  for (std::size_t k = 0; k < size; ++k) {
    if (c[k] == 0) continue;
    std::size_t a = k % phi, mask = k / phi;
    FieldElement term = FieldElement(c[k], e.target) * FieldElement::root_of_unity(N, long(a), e.target);
    for (std::size_t j = 0; j < depth; ++j)
      if (mask >> j & 1) term *= e.radical_images[j];
    out += term;
  }
  return out;
}

}  // namespace qcliff
