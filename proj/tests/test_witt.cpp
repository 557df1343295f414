#include "doctest.h"
#include "support.hpp"

#include "qcliff/qnumbers.hpp"
#include "qcliff/witt.hpp"

using namespace qcliff;

namespace {

std::vector<Weight> distinct_positive(std::size_t n, long hi) {
  std::vector<Weight> out;
  std::vector<long> v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(Weight{v});
      return;
    }
    for (long x = 1; x <= hi; ++x) {
      if (std::find(v.begin(), v.begin() + static_cast<long>(i), x) != v.begin() + static_cast<long>(i)) continue;
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

using FMatrix = Matrix<FieldElement>;

FMatrix specialize(const Matrix<RatFunc>& m, const FieldElement& x) {
  FMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) r[i].push_back(e.eval(x));
  return r;
}

FMatrix fmul(const FMatrix& a, const FMatrix& b) {
  FMatrix r(a.size(), std::vector<FieldElement>(b.front().size(), FieldElement(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

// Clifford relations checked after substituting a rational point: an
// independent route through plain matrix products over the constants.
bool relations_at(const ModuleMatrices& mm, const QuadSpace& q, const FieldElement& x) {
  const std::size_t d = static_cast<std::size_t>(mm.dim());
  std::vector<FMatrix> T;
  for (const auto& m : mm.T) T.push_back(specialize(m, x));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j) {
      FMatrix a = fmul(T[i], T[j]), b = fmul(T[j], T[i]);
      const FieldElement diag = i == j ? FieldElement(2) * q.lambda[i].eval(x) : FieldElement(0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (a[r][c] + b[r][c] != (r == c ? diag : FieldElement(0))) return false;
    }
  return true;
}

void check_module(const Weight& w, bool in_t) {
  QuadSpace q = in_t ? QuadSpace::from_weight_t(w) : QuadSpace::from_weight(w);
  WittDecomposition wd;
  ModuleMatrices mm = build_module(q, &wd);
  auto cls = classify_simples(w);
  INFO(w.str(), in_t ? " in t" : " in q");
  CHECK(mm.dim_even == cls.dim_even);
  CHECK(mm.dim_odd == cls.dim_odd);
  auto chk = verify_module_detail(mm, q);
  CHECK_MESSAGE(chk.ok(), chk.failure);
  CHECK(relations_at(mm, q, FieldElement(mpq_class(7, 3))));
  // 2^{dim W} times the residual module dimension
  long residual = wd.z.empty() ? 1 : static_cast<long>(wd.z.size()) * 2;
  if (q.size_nonzero() == 0) residual = 1;
  CHECK(mm.dim() == (1L << wd.witt_index()) * residual);
}

}  // namespace

TEST_SUITE("witt") {
  TEST_CASE("examples") {
    auto d421 = witt_decompose(QuadSpace::from_weight_t(Weight{{4, 2, 1}}));
    CHECK(d421.witt_index() == 1);
    CHECK(d421.z.size() == 1);
    // β(z, z) is a nonzero multiple of Λ1 Λ2 Λ3
    const RatFunc prod = RatFunc(lambda_cap_t(4) * lambda_cap_t(2));
    const RatFunc ratio = d421.z_norms[0] / prod;
    CHECK(ratio.is_constant());
    CHECK_FALSE(ratio.is_zero());
    auto d11 = witt_decompose(QuadSpace::from_weight(Weight{{1, 1}}));
    CHECK(d11.witt_index() == 1);
    CHECK(d11.z.empty());
    auto d31 = witt_decompose(QuadSpace::from_weight(Weight{{3, 1}}));
    CHECK(d31.witt_index() == 0);
    CHECK(d31.z.size() == 2);
    auto d1 = witt_decompose(QuadSpace::from_weight(Weight{{2}}));
    CHECK(d1.witt_index() == 0);
    CHECK(d1.z.size() == 1);
  }

  TEST_CASE("Gram identities for distinct positive entries") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& w : distinct_positive(n, n == 4 ? 4 : 5)) {
        for (bool in_t : {true, false}) {
          // q-variable towers grow faster; keep that half of the sweep smaller
          if (!in_t && (n == 4 || *std::max_element(w.v.begin(), w.v.end()) > 4)) continue;
          QuadSpace q = in_t ? QuadSpace::from_weight_t(w) : QuadSpace::from_weight(w);
          auto wd = witt_decompose(q);
          std::string why;
          CHECK_MESSAGE(witt_check(q, wd, &why), w.str(), " ", why);
          CHECK(static_cast<long>(wd.witt_index()) == classify_simples(w).witt_index);
        }
      }
  }

  TEST_CASE("Gram matrix has the hyperbolic shape") {
    QuadSpace q = QuadSpace::from_weight_t(Weight{{4, 3, 2, 1}});
    auto wd = witt_decompose(q);
    auto g = wd.gram(q);
    const std::size_t k = wd.witt_index();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(g[i][j].is_zero());
        CHECK(g[k + i][k + j].is_zero());
        CHECK(g[i][k + j] == RatFunc(i == j ? 1 : 0));
      }
  }

  TEST_CASE("theta examples") {
    auto m10 = build_module(QuadSpace::from_weight(Weight{{1, 0}}));
    CHECK(m10.dim_even == 1);
    CHECK(m10.dim_odd == 1);
    CHECK(m10.T[0] == Matrix<RatFunc>{{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}});
    CHECK(m10.T[1] == mat_zero(2, 2));
    auto m00 = build_module(QuadSpace::from_weight(Weight{{0, 0, 0}}));
    CHECK(m00.dim_even == 1);
    CHECK(m00.dim_odd == 0);
    for (const auto& t : m00.T) CHECK(t == mat_zero(1, 1));
    auto m421 = build_module(QuadSpace::from_weight_t(Weight{{4, 2, 1}}));
    CHECK(m421.dim_even == 2);
    CHECK(m421.dim_odd == 2);
  }

  TEST_CASE("theta matrices verify") {
    std::vector<Weight> ws = {Weight{{1, 1}}, Weight{{2, 2}}, Weight{{1, 1, 1}}, Weight{{1, 0}}, Weight{{0, 0}},
                              Weight{{3, 1}}, Weight{{2, -2}}, Weight{{3, 0, 1}}};
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& w : distinct_positive(n, 4)) ws.push_back(w);
    for (const auto& w : ws) check_module(w, true);
    for (const auto& w : {Weight{{4, 2, 1}}, Weight{{1, 1}}, Weight{{3, 1}}, Weight{{2, 1}}}) check_module(w, false);
  }

  TEST_CASE("verify_module rejects broken matrices") {
    QuadSpace q = QuadSpace::from_weight_t(Weight{{4, 2, 1}});
    auto mm = build_module(q);
    REQUIRE(verify_module(mm, q));
    auto doubled = mm;
    for (auto& row : doubled.T[0])
      for (auto& e : row) e = RatFunc(2) * e;
    CHECK_FALSE(verify_module(doubled, q));
    CHECK_FALSE(relations_at(doubled, q, FieldElement(mpq_class(7, 3))));
    auto zero = mm;
    for (auto& t : zero.T) t = mat_zero(4, 4);
    CHECK_FALSE(verify_module(zero, q));
    // Relations hold but the action is not faithful.
    QuadSpace q11 = QuadSpace::from_weight(Weight{{1, 1}});
    ModuleMatrices diag;
    diag.var = "q";
    diag.dim_even = 1;
    diag.dim_odd = 1;
    const Matrix<RatFunc> x = {{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}};
    diag.T = {x, x};
    auto chk = verify_module_detail(diag, q11);
    CHECK_FALSE(chk.relations);
    CHECK_FALSE(chk.ok());
  }

  TEST_CASE("kernel generators act by zero") {
    QuadSpace q = QuadSpace::from_weight_t(Weight{{2, 0, 1, 0}});
    auto mm = build_module(q);
    CHECK(mm.T[1] == mat_zero(static_cast<std::size_t>(mm.dim()), static_cast<std::size_t>(mm.dim())));
    CHECK(mm.T[3] == mat_zero(static_cast<std::size_t>(mm.dim()), static_cast<std::size_t>(mm.dim())));
    CHECK(verify_module(mm, q));
  }
}
