#include "doctest.h"
#include "support.hpp"

#include "qcliff/worked_example.hpp"
#include "qcliff/qnumbers.hpp"

#include <chrono>

using namespace qcliff;

TEST_SUITE("example") {
  TEST_CASE("worked example (4,2,1) in t") {
    const auto start = std::chrono::steady_clock::now();
    auto r = worked_example();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 1.0);
    CHECK(r.w_solves);
    CHECK(r.c1_residue);
    CHECK(r.printed_gram);
    CHECK(r.printed_zz);
    CHECK(r.constructed_gram);
    CHECK(r.constructed_module);
    CHECK(r.printed_module);
    CHECK(r.pass());
    CHECK(r.module.dim_even == 2);
    CHECK(r.module.dim_odd == 2);
  }

  TEST_CASE("printed data recomputed by hand") {
    auto r = worked_example();
    const RatFunc t(Poly::x());
    // Λ1 X^2 + Λ2 Y^2 + Λ3 Z^2 with Λ = (t^3 - 2t, t, 1)
    RatFunc lhs = RatFunc(lambda_cap_t(4)) * r.w[0] * r.w[0] + t * r.w[1] * r.w[1] + r.w[2] * r.w[2];
    CHECK(lhs.is_zero());
    // β(z, z) = -1/4 t^2 (t^2 - 2)
    RatFunc zz = RatFunc(lambda_cap_t(4)) * r.z[0] * r.z[0] + t * r.z[1] * r.z[1] + r.z[2] * r.z[2];
    CHECK(zz == RatFunc(FieldElement(mpq_class(-1, 4))) * t * t * (t * t - RatFunc(2)));
    CHECK(r.zz_printed == zz);
    // C1^2 - t is divisible by t^2 - 2
    Poly m = Poly::x() * Poly::x() - Poly(2);
    CHECK(((r.c1 * r.c1 - Poly::x().lifted(r.c1.tower())) % m.lifted(r.c1.tower())).is_zero());
  }

  TEST_CASE("deviations are logged, not failed") {
    auto r = worked_example();
    for (const auto& c : r.coefficients)
      if (!c.equal) CHECK_FALSE(c.ratio.empty());
    CHECK(r.coefficients.size() >= 3);
  }
}
