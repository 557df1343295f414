#include "qcliff/clifford.hpp"

#include "qcliff/qnumbers.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qcliff {

bool Weight::in_p_geq0() const {
  for (long x : v)
    if (x < 0) return false;
  return true;
}

bool Weight::gl_dominant() const {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

bool Weight::q_dominant() const {
  if (!gl_dominant()) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1] && v[i] != 0) return false;
  return true;
}

std::size_t Weight::size_nonzero() const {
  std::size_t k = 0;
  for (long x : v) k += x != 0;
  return k;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("empty weight");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("malformed weight: " + text);
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight entry: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("malformed weight entry: " + tok);
    w.v.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (w.v.size() > 20) throw std::invalid_argument("weights with more than 20 entries are not supported");
  return w;
}

QuadSpace QuadSpace::from_values(std::vector<RatFunc> lambda, std::string var) {
  QuadSpace q;
  q.lambda = std::move(lambda);
  q.var = std::move(var);
  for (std::size_t i = 0; i < q.lambda.size(); ++i) (q.lambda[i].is_zero() ? q.zero : q.nonzero).push_back(i);
  return q;
}

QuadSpace QuadSpace::from_weight(const Weight& w) {
  std::vector<RatFunc> l;
  for (long x : w.v) l.push_back(lambda_cap(x));
  return from_values(std::move(l), "q");
}

QuadSpace QuadSpace::from_weight_t(const Weight& w) {
  std::vector<RatFunc> l;
  for (long x : w.v) l.emplace_back(lambda_cap_t(x));
  return from_values(std::move(l), "t");
}

QuadSpace QuadSpace::classical(const Weight& w) {
  std::vector<RatFunc> l;
  for (long x : w.v) l.emplace_back(x);
  return from_values(std::move(l), "q");
}

CliffElem CliffElem::basis(std::size_t n, Subset s, RatFunc c) {
  CliffElem e(n);
  e.add(s, c);
  return e;
}

CliffElem CliffElem::generator(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return basis(n, Subset(1) << (i - 1));
}

RatFunc CliffElem::coeff(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RatFunc() : it->second;
}

int CliffElem::parity() const {
  int p = -2;
  for (const auto& [s, c] : terms_) {
    int ps = std::popcount(s) % 2;
    if (p == -2) p = ps;
    else if (p != ps) return -1;
  }
  return p == -2 ? 0 : p;
}

CliffElem& CliffElem::add(Subset s, const RatFunc& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

CliffElem operator+(const CliffElem& a, const CliffElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Clifford elements over different n");
  CliffElem r(a);
  for (const auto& [s, c] : b.terms_) r.add(s, c);
  return r;
}

CliffElem operator-(const CliffElem& a, const CliffElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Clifford elements over different n");
  CliffElem r(a);
  for (const auto& [s, c] : b.terms_) r.add(s, -c);
  return r;
}

CliffElem operator*(const RatFunc& c, const CliffElem& a) {
  CliffElem r(a.n_);
  for (const auto& [s, v] : a.terms_) r.add(s, c * v);
  return r;
}

bool operator==(const CliffElem& a, const CliffElem& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

std::string CliffElem::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i)
      if (s >> i & 1) mono += "t" + std::to_string(i + 1);
    std::string cs = c.str(var);
    if (!first) os << " + ";
    if (mono.empty()) os << cs;
    else if (cs == "1") os << mono;
    else os << "(" << cs << ")·" << mono;
    first = false;
  }
  return os.str();
}

int monomial_sign(Subset s, Subset t) {
  // Each t_j of T moves left past the elements of S larger than j.
  int swaps = 0;
  for (Subset rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

CliffElem cliff_mul(const CliffElem& x, const CliffElem& y, const QuadSpace& q) {
  if (x.n() != y.n() || x.n() != q.n()) throw std::invalid_argument("cliff_mul: mismatched n");
  CliffElem r(x.n());
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms()) {
      RatFunc c = a * b;
      for (Subset common = s & t; common; common &= common - 1) c *= q.lambda[static_cast<std::size_t>(std::countr_zero(common))];
      if (monomial_sign(s, t) < 0) c = -c;
      r.add(s ^ t, c);
    }
  return r;
}

KernelSplit split_kernel(const QuadSpace& q) {
  KernelSplit k;
  std::vector<RatFunc> kept;
  for (std::size_t i : q.nonzero) kept.push_back(q.lambda[i]);
  k.nondegenerate = QuadSpace::from_values(std::move(kept), q.var);
  k.kernel = q.zero;
  k.kept = q.nonzero;
  return k;
}

bool discriminant_square_by_orbits(const Weight& w) {
  std::map<long, int> classes;
  for (long x : w.v)
    if (x != 0) classes[std::labs(x)]++;
  for (const auto& [m, size] : classes)
    if (m != 1 && size % 2) return false;
  return true;
}

bool discriminant_square_by_squarefree(const Weight& w) {
  RatFunc prod(1);
  for (long x : w.v)
    if (x != 0) prod *= lambda_cap(x);
  return ratfunc_is_square_over_closure(prod);
}

DiscriminantResult discriminant_is_square(const Weight& w) {
  return {discriminant_square_by_orbits(w), discriminant_square_by_squarefree(w)};
}

Classification classify_simples(const Weight& w) {
  DiscriminantResult d = discriminant_is_square(w);
  if (!d.agree()) throw std::logic_error("discriminant routes disagree for " + w.str());
  Classification c;
  c.lambda = w;
  c.size_nonzero = w.size_nonzero();
  c.discriminant_square = d.orbit_route;
  const std::size_t s = c.size_nonzero;
  const long k = static_cast<long>(s / 2);
  if (s == 0) {
    // exterior algebra: the trivial module and its parity shift
    c.count = 2;
    c.dim_even = 1;
    c.dim_odd = 0;
    c.parity_invariant = false;
    c.witt_index = 0;
  } else if (s % 2 == 1) {
    c.count = 1;
    c.dim_even = c.dim_odd = 1L << k;
    c.parity_invariant = true;
    c.witt_index = k;
  } else if (c.discriminant_square) {
    c.count = 2;
    c.dim_even = c.dim_odd = 1L << (k - 1);
    c.parity_invariant = false;
    c.witt_index = k;
  } else {
    c.count = 1;
    c.dim_even = c.dim_odd = 1L << k;
    c.parity_invariant = true;
    c.witt_index = k - 1;
  }
  return c;
}

}  // namespace qcliff
