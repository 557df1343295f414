#include "doctest.h"
#include "oracles.hpp"

#include "qcliff/characters.hpp"
#include "qcliff/limit.hpp"
#include "qcliff/qnumbers.hpp"

#include <bit>

using namespace qcliff;

namespace {

using qtest::box;

mpq_class qpow(const mpq_class& q, long e) {
  mpq_class r = 1;
  for (long k = 0; k < std::labs(e); ++k) r *= q;
  return e < 0 ? mpq_class(1 / r) : r;
}

}  // namespace

TEST_SUITE("limit") {
  TEST_CASE("examples") {
    auto r = limit_structure_constants(Weight{{4, 2, 1}});
    CHECK(r.all_pass());
    CHECK(r.entries.size() == 64);
    for (const auto& e : r.entries)
      if (e.s == 1 && e.t == 1) CHECK(e.classical == "4");
    auto z = limit_structure_constants(Weight{{0, 0}});
    CHECK(z.all_pass());
    for (const auto& e : z.entries)
      if (e.s & e.t) CHECK(e.classical == "0");
    auto t31 = limit_structure_constants(Weight{{3, 1}});
    CHECK(t31.all_pass());
    CHECK(t31.entries.size() == 16);
    CHECK(t31.failures() == 0);
  }

  TEST_CASE("Lambda at one is the weight") {
    for (long m = -8; m <= 8; ++m) CHECK(eval_at_one(lambda_cap(m)) == FieldElement(m));
  }

  TEST_CASE("classical products by direct counting") {
    // t_S t_T = (-1)^{#{(i,j): j in T, i in S, i > j}} Π_{S∩T} λ_i t_{S^T}
    Weight w{{2, -1, 3}};
    QuadSpace cl = QuadSpace::classical(w);
    for (Subset s = 0; s < 8; ++s)
      for (Subset t = 0; t < 8; ++t) {
        int inv = 0;
        mpq_class c = 1;
        for (int j = 0; j < 3; ++j)
          if (t >> j & 1) inv += std::popcount(s >> (j + 1));
        for (int i = 0; i < 3; ++i)
          if ((s & t) >> i & 1) c *= w.v[static_cast<std::size_t>(i)];
        if (inv % 2) c = -c;
        auto prod = cliff_mul(CliffElem::basis(3, s), CliffElem::basis(3, t), cl);
        CHECK(prod == CliffElem::basis(3, s ^ t, RatFunc(FieldElement(c))));
      }
  }

  TEST_CASE("all table entries pass on the box") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& w : box(n, 0, 4)) CHECK_MESSAGE(limit_structure_constants(w).all_pass(), w.str());
    CHECK(limit_structure_constants(Weight{{-2, 3}}).all_pass());
  }

  TEST_CASE("character ratio") {
    CHECK(character_ratio_check(Weight{{3, 1}}).clifford_route == 2);
    CHECK(character_ratio_check(Weight{{3, 1}}).consistent());
    CHECK(character_ratio_check(Weight{{4, 2, 1}}).clifford_route == 1);
    CHECK(character_ratio_check(Weight{{0, 0, 0}}).clifford_route == 1);
    CHECK(character_ratio_check(Weight{{0, 0, 0}}).consistent());
    for (const auto& w : box(3, 0, 4)) {
      if (!(w.q_dominant() && w.in_p_geq0())) continue;
      auto r = character_ratio_check(w);
      CHECK_MESSAGE(r.consistent(), w.str());
      // ch_vq carries the same factor over the classical character
      auto q = ch_vq(w), c = sergeev_character(w);
      CHECK(q == mpz_class(r.case_route) * c);
    }
  }

  TEST_CASE("gadget identities") {
    auto rows = gadget_identity_suite(8);
    CHECK(rows.size() == 17 * 17);
    for (const auto& r : rows) CHECK_MESSAGE(r.pass(), r.m, ",", r.n);
    // The same identities at rational points, from the closed forms
    // (q^m; n) = (q^{m+n} - 1)/(q - 1) and [q^m; 0] = (q^m - q^-m)/(q - q^-1).
    for (const mpq_class q : {mpq_class(2), mpq_class(3, 2), mpq_class(-5, 7)})
      for (long m = -8; m <= 8; ++m)
        for (long n = -8; n <= 8; ++n) {
          auto paren = [&](long a, long b) -> mpq_class { return (qpow(q, a + b) - 1) / (q - 1); };
          CHECK(paren(m, n) == qpow(q, n) * paren(m, 0) + (qpow(q, n) - 1) / (q - 1));
          const mpq_class bracket = (qpow(q, m) - qpow(q, -m)) / (q - 1 / q);
          CHECK(bracket == q * (q - 1) / (q * q - 1) * (1 + qpow(q, -m)) * paren(m, 0));
        }
    CHECK(gadget_values(2, 1).first == q_int(3));
  }

  TEST_CASE("kbar square chain") {
    for (long m = -8; m <= 8; ++m) {
      auto r = kbar_square_chain(m);
      CHECK_MESSAGE(r.pass, m);
      CHECK(r.value == lambda_cap(m).str("q"));
    }
  }
}
