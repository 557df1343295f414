#include "doctest.h"

#include "qcliff/qn.hpp"

using namespace qcliff;

namespace {
std::vector<SuperMatrix> all_generators(const GeneratorSet& g) {
  std::vector<SuperMatrix> r;
  for (const auto* fam : {&g.e, &g.ebar, &g.f, &g.fbar, &g.k, &g.kbar}) r.insert(r.end(), fam->begin(), fam->end());
  return r;
}

int sign_of(const SuperMatrix& a) { return a.parity() == Parity::Odd ? 1 : 0; }
}  // namespace

TEST_SUITE("qn") {
  TEST_CASE("generator entries for n = 2") {
    auto g = build_generators(2);
    CHECK(g.e[0].entries() == "(1,2)=1 (3,4)=1");
    CHECK(g.kbar[0].entries() == "(1,3)=1 (3,1)=1");
    CHECK(g.e[0].parity() == Parity::Even);
    CHECK(g.ebar[0].parity() == Parity::Odd);
    CHECK(supercommutator(g.e[0], g.f[0]) == g.k[0] - g.k[1]);
    CHECK(supercommutator(g.kbar[0], g.kbar[0]) == mpq_class(2) * g.k[0]);
  }

  TEST_CASE("generators lie in q(n) and brackets stay there") {
    for (int n = 2; n <= 4; ++n) {
      auto gens = all_generators(build_generators(n));
      for (const auto& a : gens) {
        CHECK(a.in_qn());
        CHECK(a.parity() != Parity::Mixed);
        for (const auto& b : gens) CHECK(supercommutator(a, b).in_qn());
      }
    }
  }

  TEST_CASE("super Jacobi identity") {
    for (int n = 2; n <= 3; ++n) {
      auto gens = all_generators(build_generators(n));
      for (const auto& a : gens)
        for (const auto& b : gens)
          for (const auto& c : gens) {
            const int pa = sign_of(a), pb = sign_of(b), pc = sign_of(c);
            auto s = [](int e) { return mpq_class(e % 2 ? -1 : 1); };
            SuperMatrix lhs = s(pa * pc) * supercommutator(a, supercommutator(b, c)) +
                              s(pb * pa) * supercommutator(b, supercommutator(c, a)) +
                              s(pc * pb) * supercommutator(c, supercommutator(a, b));
            CHECK(lhs.is_zero());
          }
    }
  }

  TEST_CASE("supercommutator symmetry") {
    auto gens = all_generators(build_generators(3));
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const int e = sign_of(a) * sign_of(b);
        CHECK(supercommutator(a, b) == (e ? mpq_class(1) : mpq_class(-1)) * supercommutator(b, a));
      }
  }

  TEST_CASE("mixed parity is rejected") {
    auto g = build_generators(2);
    CHECK_THROWS_AS(supercommutator(g.e[0] + g.ebar[0], g.f[0]), std::invalid_argument);
  }

  TEST_CASE("presentation holds for n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
      auto r = verify_presentation(n);
      CHECK(r.all_pass());
      CHECK_FALSE(r.results.empty());
      for (const auto& [name, counts] : r.family_summary()) CHECK(counts.first == counts.second);
    }
    CHECK_THROWS(verify_presentation(1));
  }

  TEST_CASE("a broken relation is caught") {
    // Feed a generator set where k_1 is doubled through the table directly.
    auto g = build_generators(3);
    g.k[0] = mpq_class(2) * g.k[0];
    int failures = 0;
    for (const auto& fam : relation_table()) {
      std::vector<int> idx(fam.index_sets.size(), 1);
      if (fam.condition && !fam.condition(idx, 3)) continue;
      if (!fam.defect(g, idx).is_zero()) ++failures;
    }
    CHECK(failures > 0);
  }
}
