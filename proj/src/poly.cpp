#include "qcliff/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qcliff {

Poly::Poly(FieldElement c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const FieldElement& c, std::size_t deg) {
  if (c.is_zero()) return Poly();
  std::vector<FieldElement> v(deg + 1, FieldElement::zero(c.tower()));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::from_rationals(const std::vector<mpq_class>& c) {
  std::vector<FieldElement> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldElement(0); }

FieldElement Poly::lead() const {
  if (c_.empty()) return FieldElement(0);
  return c_.back();
}

TowerPtr Poly::tower() const {
  TowerPtr t = Tower::base();
  bool seen = false;
  for (const auto& c : c_) {
    if (c.is_rational()) continue;
    t = seen ? join(t, c.tower()) : c.tower();
    seen = true;
  }
  return t;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b(*this);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  if (lead().is_one()) return *this;
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<FieldElement> r(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * FieldElement(static_cast<long>(k));
  return Poly(std::move(r));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement r = FieldElement::zero(x.tower());
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * g + Poly(c_[k]);
  return r;
}

Poly Poly::shift(long k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<FieldElement> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  std::size_t drop = static_cast<std::size_t>(-k);
  for (std::size_t j = 0; j < drop && j < c_.size(); ++j)
    if (!c_[j].is_zero()) throw std::logic_error("shift would drop a nonzero coefficient");
  if (drop >= c_.size()) return Poly();
  return Poly(std::vector<FieldElement>(c_.begin() + static_cast<long>(drop), c_.end()));
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return k;
}

Poly Poly::lifted(const TowerPtr& t) const {
  Poly r(*this);
  for (auto& c : r.c_) c = c.lifted(t);
  return r;
}

Poly Poly::map(const TowerEmbedding& e) const {
  std::vector<FieldElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(embed(c, e));
  return Poly(std::move(v));
}

namespace {
bool needs_parens(const std::string& s) {
  // a sum or difference after the first character
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] == ' ') return true;
  return false;
}
}  // namespace

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const FieldElement& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = false;
    if (!needs_parens(cs) && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (needs_parens(cs)) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else term = cs + "·" + mono;
    if (first) os << (neg ? "-" : "") << term;
    else os << (neg ? " - " : " + ") << term;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<FieldElement> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<FieldElement> q(r.size() - db);
  const FieldElement inv = b.lead().inverse();
  const bool monic_b = b.lead().is_one();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    FieldElement c = monic_b ? r[k] : r[k] * inv;
    q[k - db] = c;
    for (std::size_t j = 0; j < db; ++j)
      if (!bc[j].is_zero()) r[k - db + j] -= c * bc[j];
    r[k] = FieldElement(0);
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  FieldElement inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<Poly> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  std::vector<Poly> out;
  if (a.is_constant()) return out;
  Poly f = a.monic();
  Poly d = f.derivative();
  Poly g = gcd(f, d);
  Poly b = f / g;
  Poly c = d / g;
  Poly bd = c - b.derivative();
  while (!b.is_constant()) {
    Poly h = gcd(b, bd);
    out.push_back(h);
    b = b / h;
    c = bd / h;
    bd = c - b.derivative();
  }
  while (!out.empty() && out.back().is_constant()) out.pop_back();
  return out;
}

std::pair<Poly, Poly> squarefree_part(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("square-free part of zero");
  auto parts = squarefree_decomposition(a);
  Poly a1(a.lead()), m(1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const unsigned mult = static_cast<unsigned>(k + 1);
    if (mult % 2) a1 *= parts[k];
    if (mult >= 2) m *= parts[k].pow(mult / 2);
  }
  return {a1, m};
}

bool is_squarefree(const Poly& a) {
  if (a.is_constant()) return true;
  return gcd(a, a.derivative()).is_constant();
}

TowerPtr absorb(TowerPtr t, const Poly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) t = join(t, c.tower());
  return t;
}

}  // namespace qcliff
