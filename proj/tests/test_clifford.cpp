#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "qcliff/clifford.hpp"
#include "qcliff/qnumbers.hpp"

#include <bit>

using namespace qcliff;

namespace {
using qtest::box;

// Naive product of basis words: move generators one at a time.
CliffElem word_product(std::size_t n, const std::vector<std::size_t>& word, const QuadSpace& q) {
  CliffElem r = CliffElem::basis(n, 0);
  for (std::size_t i : word) r = cliff_mul(r, CliffElem::generator(n, i), q);
  return r;
}
}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("weights") {
    Weight w = parse_weight("4,2,1");
    CHECK(w.str() == "(4,2,1)");
    CHECK(w.q_dominant());
    CHECK(w.in_p_geq0());
    CHECK_FALSE(parse_weight("1,1").q_dominant());
    CHECK(parse_weight("1,1").gl_dominant());
    CHECK(parse_weight("2,0,0").q_dominant());
    CHECK_FALSE(parse_weight("1,-1").in_p_geq0());
    CHECK_THROWS_AS(parse_weight("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(""), std::invalid_argument);
  }

  TEST_CASE("generator squares and anticommutation") {
    Weight w{{3, 1, 2}};
    QuadSpace q = QuadSpace::from_weight(w);
    for (std::size_t i = 1; i <= 3; ++i) {
      auto ti = CliffElem::generator(3, i);
      CHECK(cliff_mul(ti, ti, q) == CliffElem::basis(3, 0, lambda_cap(w.v[i - 1])));
      for (std::size_t j = i + 1; j <= 3; ++j) {
        auto tj = CliffElem::generator(3, j);
        CHECK((cliff_mul(ti, tj, q) + cliff_mul(tj, ti, q)).is_zero());
      }
    }
  }

  TEST_CASE("basis products match naive word products") {
    Weight w{{2, 3, 1, 4}};
    QuadSpace q = QuadSpace::from_weight(w);
    for (Subset s = 0; s < 16; ++s)
      for (Subset t = 0; t < 16; ++t) {
        std::vector<std::size_t> word;
        for (std::size_t i = 0; i < 4; ++i)
          if (s >> i & 1) word.push_back(i + 1);
        for (std::size_t i = 0; i < 4; ++i)
          if (t >> i & 1) word.push_back(i + 1);
        CHECK(cliff_mul(CliffElem::basis(4, s), CliffElem::basis(4, t), q) == word_product(4, word, q));
      }
  }

  TEST_CASE("associativity") {
    std::mt19937 rng(17);
    for (std::size_t n = 1; n <= 4; ++n) {
      Weight w{std::vector<long>(n)};
      for (std::size_t i = 0; i < n; ++i) w.v[i] = static_cast<long>(i % 3) - 1 + static_cast<long>(n);
      QuadSpace q = QuadSpace::from_weight(w);
      auto rnd = [&] {
        CliffElem e(n);
        std::uniform_int_distribution<int> d(-2, 2);
        for (Subset s = 0; s < (Subset(1) << n); ++s) e.add(s, RatFunc(d(rng)));
        return e;
      };
      for (int k = 0; k < 5; ++k) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(cliff_mul(cliff_mul(a, b, q), c, q) == cliff_mul(a, cliff_mul(b, c, q), q));
      }
    }
  }

  TEST_CASE("parity and center") {
    const std::size_t n = 3;
    QuadSpace q = QuadSpace::from_weight(Weight{{1, 2, 3}});
    auto full = CliffElem::basis(n, 0b111);
    CHECK(full.parity() == 1);
    // For odd n the top element commutes with every generator.
    for (std::size_t i = 1; i <= n; ++i) {
      auto ti = CliffElem::generator(n, i);
      CHECK(cliff_mul(full, ti, q) == cliff_mul(ti, full, q));
    }
    // For even n it anticommutes.
    QuadSpace q2 = QuadSpace::from_weight(Weight{{1, 2}});
    auto top2 = CliffElem::basis(2, 0b11);
    auto t1 = CliffElem::generator(2, 1);
    CHECK((cliff_mul(top2, t1, q2) + cliff_mul(t1, top2, q2)).is_zero());
    CHECK((CliffElem::basis(2, 0b01) + CliffElem::basis(2, 0b11)).parity() == -1);
  }

  TEST_CASE("monomial sign") {
    CHECK(monomial_sign(0b01, 0b10) == 1);
    CHECK(monomial_sign(0b10, 0b01) == -1);
    for (Subset s = 0; s < 32; ++s)
      for (Subset t = 0; t < 32; ++t) {
        int inv = 0;
        for (int i = 0; i < 5; ++i)
          if (t >> i & 1) inv += std::popcount(s >> (i + 1));
        CHECK(monomial_sign(s, t) == (inv % 2 ? -1 : 1));
      }
  }

  TEST_CASE("kernel split") {
    auto ks = split_kernel(QuadSpace::from_weight(Weight{{2, 0, 0}}));
    CHECK(ks.kept == std::vector<std::size_t>{0});
    CHECK(ks.kernel == std::vector<std::size_t>{1, 2});
    CHECK(ks.nondegenerate.n() == 1);
    auto ks2 = split_kernel(QuadSpace::from_weight(Weight{{1, -1, 0}}));
    CHECK(ks2.kept.size() == 2);
  }

  TEST_CASE("discriminant routes agree") {
    CHECK(discriminant_is_square(Weight{{2, 2, 3, 3}}).orbit_route);
    CHECK(discriminant_is_square(Weight{{2, 2, 3, 3}}).agree());
    CHECK_FALSE(discriminant_is_square(Weight{{2, 3}}).orbit_route);
    CHECK(discriminant_is_square(Weight{{2, -2}}).orbit_route);
    CHECK(discriminant_is_square(Weight{{1, 5, 5}}).orbit_route);
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& w : box(n, 0, 5)) {
        auto r = discriminant_is_square(w);
        CHECK_MESSAGE(r.agree(), w.str());
      }
    for (const auto& w : box(3, -4, 4)) CHECK_MESSAGE(discriminant_is_square(w).agree(), w.str());
  }

  TEST_CASE("classification") {
    auto c = classify_simples(Weight{{4, 2, 1}});
    CHECK(c.size_nonzero == 3);
    CHECK(c.dim_even == 2);
    CHECK(c.dim_odd == 2);
    CHECK(c.count == 1);
    CHECK(c.witt_index == 1);
    auto c2 = classify_simples(Weight{{1, 1}});
    CHECK(c2.discriminant_square);
    CHECK(c2.count == 2);
    CHECK(c2.dim_even == 1);
    CHECK(c2.dim_odd == 1);
    CHECK(c2.witt_index == 1);
    auto c3 = classify_simples(Weight{{3, 1}});
    CHECK_FALSE(c3.discriminant_square);
    CHECK(c3.count == 1);
    CHECK(c3.dim_even == 2);
    CHECK(c3.witt_index == 0);
    auto c0 = classify_simples(Weight{{0, 0}});
    CHECK(c0.count == 2);
    CHECK(c0.dim_even == 1);
    CHECK(c0.dim_odd == 0);
  }

  TEST_CASE("classification dimension matches the Clifford algebra") {
    // Odd s: the superalgebra is of type Q over the closure, dim^2 = 2 * 2^s.
    // Even s: type M over the closure, dim^2 = 2^s, doubled again when the
    // discriminant is not a square and the module is of type Q over K.
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& w : box(n, 0, 4)) {
        auto c = classify_simples(w);
        const long total = c.dim_even + c.dim_odd;
        const long s = static_cast<long>(c.size_nonzero);
        if (s == 0) {
          CHECK(total == 1);
          continue;
        }
        const long sq = total * total;
        if (s % 2 == 1) CHECK(sq == (2L << s));
        else if (c.discriminant_square) CHECK(sq == (1L << s));
        else CHECK(sq == (4L << s));
        CHECK(c.dim_even == c.dim_odd);
        CHECK(c.parity_invariant == (c.count == 1));
      }
  }
}
