#include "qcliff/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace qcliff {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::laurent(const FieldElement& c, long k) {
  if (k >= 0) return RatFunc(Poly::monomial(c, static_cast<std::size_t>(k)));
  return RatFunc(Poly(c), Poly::monomial(FieldElement(1), static_cast<std::size_t>(-k)));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  FieldElement c = den_.lead();
  if (!c.is_one()) {
    FieldElement inv = c.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

FieldElement RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.is_zero() ? FieldElement(0) : num_.lead();
}

bool RatFunc::is_laurent() const {
  const auto& c = den_.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (!c[k].is_zero()) return false;
  return true;
}

TowerPtr RatFunc::tower() const {
  TowerPtr a = num_.tower(), b = den_.tower();
  if (a->depth() == 0 && a->conductor() == 4) return b;
  if (b->depth() == 0 && b->conductor() == 4) return a;
  return join(a, b);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (o.is_constant()) {
    num_ *= o.num_.lead();
    return *this;
  }
  // Cross-cancel first to keep degrees low.
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

FieldElement RatFunc::eval(const FieldElement& x) const {
  FieldElement d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function has a pole at " + x.str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  // Horner in the field of rational functions.
  auto horner = [&](const Poly& p) {
    RatFunc r;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * g + RatFunc(p.coeffs()[k]);
    return r;
  };
  return horner(num_) / horner(den_);
}

RatFunc RatFunc::map(const TowerEmbedding& e) const { return RatFunc(num_.map(e), den_.map(e)); }

namespace {
bool is_sum(const std::string& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] == ' ') return true;
  return false;
}
}  // namespace

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) {
    Poly p = num_ * den_.lead().inverse();
    return p.str(var);
  }
  if (is_laurent()) {
    const long shift = den_.degree();
    std::ostringstream os;
    bool first = true;
    const auto& c = num_.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k].is_zero()) continue;
      long e = static_cast<long>(k) - shift;
      std::string cs = c[k].str();
      bool neg = false;
      if (!is_sum(cs) && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      if (is_sum(cs)) cs = "(" + cs + ")";
      std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
      std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "·" + mono);
      if (first) os << (neg ? "-" : "") << term;
      else os << (neg ? " - " : " + ") << term;
      first = false;
    }
    return os.str();
  }
  std::string n = num_.str(var), d = den_.str(var);
  if ((num_.coeffs().size() > 1 && is_sum(n)) || n.find('/') != std::string::npos) n = "(" + n + ")";
  if (is_sum(d) || d.find("·") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

bool ratfunc_is_square_over_closure(const RatFunc& f) {
  if (f.is_zero()) throw std::invalid_argument("squareness test of the zero function");
  for (const Poly* p : {&f.num(), &f.den()}) {
    auto parts = squarefree_decomposition(*p);
    for (std::size_t k = 0; k < parts.size(); k += 2)
      if (!parts[k].is_constant()) return false;
  }
  return true;
}

std::optional<RatFuncSqrt> ratfunc_sqrt(const RatFunc& f, const TowerPtr& tower) {
  if (f.is_zero()) return RatFuncSqrt{RatFunc(), tower};
  if (!ratfunc_is_square_over_closure(f)) return std::nullopt;
  auto half_power = [](const Poly& p) {
    Poly r(1);
    auto parts = squarefree_decomposition(p);
    for (std::size_t k = 1; k < parts.size(); k += 2) r *= parts[k].pow(static_cast<unsigned>((k + 1) / 2));
    return r;
  };
  FieldElement c = f.num().lead();
  auto adj = tower_adjoin_sqrt(tower, c);
  RatFunc root = RatFunc(half_power(f.num()), half_power(f.den())) * RatFunc(adj.root);
  return RatFuncSqrt{root, adj.tower};
}

}  // namespace qcliff
