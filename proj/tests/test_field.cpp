#include "doctest.h"
#include "support.hpp"

using namespace qcliff;

TEST_SUITE("field") {
  TEST_CASE("adjoining the square root of -1 keeps Q(i)") {
    auto r = tower_adjoin_sqrt(Tower::base(), FieldElement(-1));
    CHECK_FALSE(r.extended);
    CHECK(r.tower == Tower::base());
    CHECK(r.root * r.root == FieldElement(-1));
    CHECK(r.root == FieldElement::imag_unit());
  }

  TEST_CASE("adjoining sqrt 4 keeps the tower") {
    auto r = tower_adjoin_sqrt(Tower::base(), FieldElement(4));
    CHECK_FALSE(r.extended);
    CHECK(r.root == FieldElement(2));
  }

  TEST_CASE("Q(i, sqrt 2, fourth root of 2) has degree 8") {
    auto q = qtest::quartic();
    CHECK(q.tower->degree() == 8);
    CHECK(q.s4 * q.s4 == q.s2);
    CHECK(q.s2 * q.s2 == FieldElement(2));
    CHECK(q.tower->symbol() == "⁴√2");
  }

  TEST_CASE("zero radicand is rejected") { CHECK_THROWS_AS(tower_adjoin_sqrt(Tower::base(), FieldElement(0)), std::invalid_argument); }

  TEST_CASE("sqrt_in_tower") {
    CHECK(sqrt_in_tower(FieldElement(-1)) == FieldElement::imag_unit());
    CHECK_FALSE(sqrt_in_tower(FieldElement(2)).has_value());
    auto q = qtest::quartic();
    auto s = sqrt_in_tower(q.s2);
    REQUIRE(s.has_value());
    CHECK(*s * *s == q.s2);
    CHECK((*s == q.s4 || *s == -q.s4));
    // never extends
    CHECK(s->tower() == q.tower);
  }

  TEST_CASE("negative radicands are pulled through i") {
    auto q = qtest::quartic();
    auto r = tower_adjoin_sqrt(q.tower, -q.s2);
    CHECK_FALSE(r.extended);
    CHECK(r.root * r.root == -q.s2);
  }

  TEST_CASE("repeated adjunctions return the same tower") {
    auto a = tower_adjoin_sqrt(Tower::base(), FieldElement(3));
    auto b = tower_adjoin_sqrt(Tower::base(), FieldElement(12));
    CHECK(a.tower == b.tower);
    CHECK(b.root * b.root == FieldElement(12));
  }

  TEST_CASE("field axioms on random samples agree with a numeric embedding") {
    std::mt19937 rng(20240611);
    auto q = qtest::quartic();
    auto r5 = tower_adjoin_sqrt(q.tower, q.s2 + FieldElement(1));
    for (const TowerPtr& t : {Tower::base(), q.tower, r5.tower, Tower::base(12)}) {
      for (int k = 0; k < 25; ++k) {
        FieldElement a = qtest::random_element(rng, t), b = qtest::random_element(rng, t), c = qtest::random_element(rng, t);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == FieldElement::zero(t));
        CHECK(qtest::close(qtest::numeric(a * b), qtest::numeric(a) * qtest::numeric(b)));
        if (!a.is_zero()) {
          CHECK(a * a.inverse() == FieldElement::one(t));
          CHECK(qtest::close(qtest::numeric(a.inverse()), 1.0L / qtest::numeric(a)));
        }
        auto s = sqrt_in_tower(a * a);
        REQUIRE(s.has_value());
        CHECK((*s == a || *s == -a));
        if (!a.is_zero()) CHECK(s->leading_sign() > 0);
      }
    }
  }

  TEST_CASE("square roots in larger cyclotomic bases") {
    for (unsigned N : {8u, 12u, 20u, 24u}) {
      std::mt19937 rng(N);
      TowerPtr t = Tower::base(N);
      for (int k = 0; k < 5; ++k) {
        FieldElement a = qtest::random_element(rng, t, 2);
        if (a.is_zero()) continue;
        auto s = sqrt_in_tower(a * a);
        REQUIRE(s.has_value());
        CHECK(*s * *s == a * a);
      }
    }
    CHECK(sqrt_in_tower(FieldElement(mpq_class(2), Tower::base(8))).has_value());  // ζ8 + ζ8^-1 = √2
    CHECK(sqrt_in_tower(FieldElement(mpq_class(3), Tower::base(12))).has_value());
    CHECK_FALSE(sqrt_in_tower(FieldElement(mpq_class(5), Tower::base(12))).has_value());
  }

  TEST_CASE("rebasing preserves arithmetic") {
    auto q = qtest::quartic();
    TowerEmbedding e = rebase_tower(q.tower, 8);
    FieldElement a = q.s4 + q.i * q.s2, b = q.s4 * q.s4 * q.s4 - FieldElement(3);
    CHECK(embed(a * b, e) == embed(a, e) * embed(b, e));
    CHECK(embed(a + b, e) == embed(a, e) + embed(b, e));
    CHECK(embed(q.s4, e) * embed(q.s4, e) == embed(q.s2, e));
    CHECK(rebase_tower(q.tower, 8).target == e.target);
  }

  TEST_CASE("roots of unity") {
    FieldElement z = FieldElement::root_of_unity(8, 1, Tower::base(8));
    CHECK(z.pow(8) == FieldElement(mpq_class(1), Tower::base(8)));
    CHECK(z.pow(4) == FieldElement(mpq_class(-1), Tower::base(8)));
    CHECK_THROWS_AS(FieldElement::root_of_unity(3, 1), ConductorRequest);
  }
}
