#include "qcliff/worked_example.hpp"

#include "qcliff/roots.hpp"

namespace qcliff {

WorkedExampleReport worked_example() {
  WorkedExampleReport r;
  r.space = QuadSpace::from_weight_t(Weight{{4, 2, 1}});
  const QuadSpace& V = r.space;

  const AdjoinResult r2 = tower_adjoin_sqrt(Tower::base(), FieldElement(2));
  const AdjoinResult r4 = tower_adjoin_sqrt(r2.tower, r2.root);
  const TowerPtr T = r4.tower;
  const FieldElement s2 = r2.root.lifted(T), s4 = r4.root, i = FieldElement::imag_unit(T);
  const FieldElement s4_8 = s4 * s2;  // 8^{1/4}
  const RatFunc t(Poly::x());
  const RatFunc one(1);

  const RatFunc X = one, Y = RatFunc(i) * t - RatFunc(s2), Z = RatFunc(s4 * (FieldElement(1) + i)) * t;
  r.w = {X, Y, Z};
  r.w_solves = V.lambda[0] * X * X + V.lambda[1] * Y * Y + V.lambda[2] * Z * Z == RatFunc();

  r.c1 = Poly(s4_8 / FieldElement(4) * (FieldElement(1) - i)) * Poly::x() + Poly(s4 / FieldElement(2) * (FieldElement(1) + i));
  const Poly t2m2 = Poly::x() * Poly::x() - Poly(2);
  r.c1_residue = (r.c1 * r.c1 - Poly::x()) % t2m2 == Poly();
  ResidueResult res = quadratic_residue_mod(Poly::x(), t2m2, Tower::base());
  r.c1_solver = res.y;
  r.c1_solver_matches = res.y == r.c1;

  r.c = RatFunc(i / (FieldElement(4) * s2)) * t.pow(-2);
  r.wstar = {r.c * X, r.c * Y, -(r.c * Z)};
  r.z = {r.c * t * Y * Z, -(r.c * t * (t * t - RatFunc(2)) * X * Z), RatFunc()};
  r.zz_printed = RatFunc(FieldElement(mpq_class(-1, 4))) * t * t * (t * t - RatFunc(2));

  const RatFunc zz = beta(V, r.z, r.z);
  r.printed_gram = beta(V, r.w, r.w).is_zero() && beta(V, r.wstar, r.wstar).is_zero() && beta(V, r.w, r.wstar) == one &&
                   beta(V, r.z, r.w).is_zero() && beta(V, r.z, r.wstar).is_zero();
  r.printed_zz = zz == r.zz_printed;

  r.printed.var = "t";
  r.printed.w = {r.w};
  r.printed.wstar = {r.wstar};
  r.printed.z = {r.z};
  r.printed.z_norms = {zz};
  r.printed.tower = T;
  r.printed.log.push_back("printed decomposition");

  r.module = build_module(V, &r.constructed);
  r.constructed_gram = witt_check(V, r.constructed);
  r.constructed_module = r.module.dim_even == 2 && r.module.dim_odd == 2 && verify_module(r.module, V);
  r.module_from_printed = theta_matrices(V, split_kernel(V), r.printed);
  r.printed_module = witt_check(V, r.printed) && verify_module(r.module_from_printed, V);

  // Printed expansions of t̄_1, t̄_2, t̄_3 in (w, w*, z).
  const RatFunc a = RatFunc(i / (FieldElement(4) * s2));
  const RatFunc k8 = RatFunc(s4_8 / FieldElement(2));
  const RatFunc printed[3][3] = {
      {a * (t * t - RatFunc(2)) / t, t * (t * t - RatFunc(2)), k8 * RatFunc(FieldElement(1) - i) * Y / t},
      {a * Y / t, RatFunc(i) * t * t - RatFunc(s2) * t, k8 * RatFunc(i - FieldElement(1)) / t},
      {RatFunc((FieldElement(1) - i) / (FieldElement(4) * s4)) / t, RatFunc(s2 * (FieldElement(1) + i) / s4) * t, RatFunc()}};
  const char* names[3] = {"w", "w*", "z"};
  for (std::size_t g = 0; g < 3; ++g) {
    Vec u(3);
    u[g] = one;
    const RatFunc exact[3] = {beta(V, u, r.wstar), beta(V, u, r.w), beta(V, u, r.z) / zz};
    for (std::size_t b = 0; b < 3; ++b) {
      ExampleCoefficient ec;
      ec.generator = g + 1;
      ec.basis = names[b];
      ec.printed = printed[g][b];
      ec.exact = exact[b];
      ec.equal = ec.printed == ec.exact;
      if (!ec.printed.is_zero() && !ec.exact.is_zero()) ec.ratio = (ec.printed / ec.exact).str("t");
      if (!ec.equal) {
        std::string msg = "t̄" + std::to_string(g + 1) + " on " + ec.basis + ": printed " + ec.printed.str("t") +
                          ", exact " + ec.exact.str("t");
        if (!ec.ratio.empty()) msg += ", ratio " + ec.ratio;
        r.deviations.push_back(msg);
      }
      r.coefficients.push_back(std::move(ec));
    }
  }
  if (!r.c1_solver_matches) r.deviations.push_back("solver residue " + r.c1_solver.str("t") + " differs from the printed C1");
  return r;
}

}  // namespace qcliff
