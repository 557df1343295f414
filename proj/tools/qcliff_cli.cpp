// qcliff: command-line front end.
// Exit codes: 0 success, 1 mathematical rejection or failed verification, 2 malformed input.

#include "qcliff/characters.hpp"
#include "qcliff/worked_example.hpp"
#include "qcliff/json_io.hpp"
#include "qcliff/legendre.hpp"
#include "qcliff/limit.hpp"
#include "qcliff/qn.hpp"
#include "qcliff/qnumbers.hpp"
#include "qcliff/roots.hpp"
#include "qcliff/witt.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace qcliff;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Weight weight_arg(const std::string& text) {
  try {
    return parse_weight(text);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

QuadSpace space_for(const Weight& w, const std::string& var) {
  return var == "q" ? QuadSpace::from_weight(w) : QuadSpace::from_weight_t(w);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(const Matrix<RatFunc>& m, const std::string& var) {
  for (const auto& row : m) {
    std::cout << "    [";
    for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? ", " : "") << row[k].str(var);
    std::cout << "]\n";
  }
}

void print_vec(const std::string& name, const Vec& v, const std::string& var) {
  std::cout << "  " << name << " = (";
  for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? ", " : "") << v[k].str(var);
  std::cout << ")\n";
}

void print_decomposition(const WittDecomposition& wd) {
  for (std::size_t j = 0; j < wd.w.size(); ++j) {
    print_vec("w" + std::to_string(j + 1), wd.w[j], wd.var);
    print_vec("w" + std::to_string(j + 1) + "*", wd.wstar[j], wd.var);
  }
  for (std::size_t k = 0; k < wd.z.size(); ++k) {
    print_vec("z" + std::to_string(k + 1), wd.z[k], wd.var);
    std::cout << "  β(z" << k + 1 << ", z" << k + 1 << ") = " << wd.z_norms[k].str(wd.var) << "\n";
  }
}

int cmd_classify(const Weight& w, bool as_json) {
  Classification c = classify_simples(w);
  if (as_json) {
    print_json(to_json(c));
    return 0;
  }
  std::cout << "λ = " << w.str() << "\n";
  for (std::size_t i = 0; i < w.n(); ++i)
    std::cout << "Λ" << i + 1 << " = " << lambda_cap(w.v[i]).str("q") << " = " << RatFunc(lambda_cap_t(w.v[i])).str("t") << "\n";
  std::cout << "|λ| = " << c.size_nonzero << "\n";
  std::cout << "discriminant: " << (c.discriminant_square ? "square" : "non-square") << "\n";
  std::cout << "simple modules: " << c.count << (c.parity_invariant ? " (parity invariant)" : " (E and ΠE)") << "\n";
  std::cout << "dimension: " << c.dim_even << "|" << c.dim_odd << "\n";
  std::cout << "Witt index: " << c.witt_index << "\n";
  return 0;
}

int cmd_witt(const Weight& w, const std::string& var, bool matrices, bool as_json) {
  if (w.n() > 8) throw Usage("witt supports at most 8 entries");
  QuadSpace q = space_for(w, var);
  WittDecomposition wd;
  ModuleMatrices mm = build_module(q, &wd);
  ModuleCheck mc = verify_module_detail(mm, q);
  const bool gram = witt_check(split_kernel(q).nondegenerate, wd);
  if (as_json) {
    json j = {{"lambda", to_json(w)}, {"decomposition", to_json(wd)}, {"gram_ok", gram}, {"module_check", to_json(mc)}};
    json m = to_json(mm);
    if (!matrices) m.erase("T");
    j["module"] = m;
    print_json(j);
    return gram && mc.ok() ? 0 : 1;
  }
  std::cout << "λ = " << w.str() << ", variable " << var << (var == "t" ? " = q^2 + q^-2" : "") << "\n";
  std::cout << "kernel: " << q.zero.size() << " generator(s) acting by 0\n";
  std::cout << "Witt index " << wd.witt_index() << ", dim Z = " << wd.z.size() << "\n";
  for (const auto& line : wd.log) std::cout << "  " << line << "\n";
  print_decomposition(wd);
  std::cout << "Gram identities: " << (gram ? "PASS" : "FAIL") << "\n";
  std::cout << "module dimension: " << mm.dim_even << "|" << mm.dim_odd << "\n";
  if (matrices)
    for (std::size_t i = 0; i < mm.T.size(); ++i) {
      std::cout << "  t̄" << i + 1 << " =\n";
      print_matrix(mm.T[i], mm.var);
    }
  std::cout << "relations: " << (mc.relations ? "PASS" : "FAIL") << ", odd: " << (mc.odd ? "PASS" : "FAIL")
            << ", span " << mc.span_rank << (mc.faithful ? " PASS" : " FAIL") << "\n";
  if (!mc.failure.empty()) std::cout << "  " << mc.failure << "\n";
  return gram && mc.ok() ? 0 : 1;
}

int cmd_legendre(const Weight& w, const std::string& var, bool as_json) {
  if (w.n() != 3) throw Usage("legendre needs a weight with exactly three entries");
  for (long x : w.v)
    if (x == 0) throw PreconditionError("legendre needs nonzero entries");
  QuadSpace q = space_for(w, var);
  LegendreSolution s = var == "q" ? legendre_solve_q(q.lambda[0], q.lambda[1], q.lambda[2])
                                  : legendre_solve(q.lambda[0], q.lambda[1], q.lambda[2]);
  const bool ok = legendre_check(q.lambda[0], q.lambda[1], q.lambda[2], s.X, s.Y, s.Z);
  if (as_json) {
    json j = to_json(s, var);
    j["verified"] = ok;
    print_json(j);
    return ok ? 0 : 1;
  }
  std::cout << "Λ1 X^2 + Λ2 Y^2 + Λ3 Z^2 = 0 for λ = " << w.str() << " (" << s.method << ")\n";
  std::cout << "  X = " << s.X.str(var) << "\n  Y = " << s.Y.str(var) << "\n  Z = " << s.Z.str(var) << "\n";
  std::cout << "verified: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_character(const Weight& w, bool quantum, bool dimension_only, bool symmetric, bool as_json) {
  CharacterPoly ch = quantum ? ch_vq(w) : sergeev_character(w);
  if (as_json) {
    json j = {{"lambda", to_json(w)}, {"quantum", quantum}, {"dimension", ch.total().get_str()},
              {"highest_coefficient", ch.coeff(w.v).get_str()}};
    if (!dimension_only) j["character"] = to_json(ch);
    print_json(j);
    return 0;
  }
  std::cout << (quantum ? "ch V^q" : "ch V") << w.str() << ": dimension " << ch.total().get_str() << "\n";
  if (!dimension_only) std::cout << (symmetric ? ch.str_symmetric() : ch.str()) << "\n";
  return 0;
}

int cmd_delta(const Weight& w, const std::string& other, bool as_json) {
  DeltaSymbol d = delta_symbol(w);
  std::optional<Weight> m;
  if (!other.empty()) m = weight_arg(other);
  if (as_json) {
    json j = {{"lambda", to_json(w)}, {"delta", to_json(d)}};
    if (m) {
      j["compare"] = to_json(*m);
      j["compare_delta"] = to_json(delta_symbol(*m));
      j["equal"] = central_char_equal(w, *m);
    }
    print_json(j);
    return 0;
  }
  std::cout << "δ" << w.str() << " = " << d.str() << "\n";
  if (m)
    std::cout << "δ" << m->str() << " = " << delta_symbol(*m).str() << "\ncentral characters "
              << (central_char_equal(w, *m) ? "equal" : "differ") << "\n";
  return 0;
}

int cmd_verify_qn(int n, bool as_json) {
  if (n < 2 || n > 12) throw Usage("--n must lie in 2..12");
  RelationReport r = verify_presentation(n);
  if (as_json) {
    print_json(to_json(r));
    return r.all_pass() ? 0 : 1;
  }
  std::cout << "q(" << n << "): " << r.results.size() << " relation instances\n";
  for (const auto& [name, counts] : r.family_summary())
    std::cout << "  " << (counts.first == counts.second ? "PASS " : "FAIL ") << name << "  (" << counts.first << "/"
              << counts.second << ")\n";
  for (const auto& res : r.results)
    if (!res.pass) std::cout << "  witness " << res.family << ": " << res.witness << "\n";
  std::cout << (r.all_pass() ? "all relation families PASS" : "FAILURES present") << "\n";
  return r.all_pass() ? 0 : 1;
}

int cmd_verify_limit(const std::string& weight, long range, bool as_json) {
  if (range < 1 || range > 64) throw Usage("--range must lie in 1..64");
  std::optional<LimitReport> lim;
  if (!weight.empty()) lim = limit_structure_constants(weight_arg(weight));
  auto gadgets = gadget_identity_suite(range);
  std::vector<KbarRow> kbar;
  for (long m = -range; m <= range; ++m) kbar.push_back(kbar_square_chain(m));
  std::size_t gfail = 0, kfail = 0;
  for (const auto& g : gadgets) gfail += !g.pass();
  for (const auto& k : kbar) kfail += !k.pass;
  const bool ok = gfail == 0 && kfail == 0 && (!lim || lim->all_pass());
  if (as_json) {
    json j = {{"range", range}};
    j["structure_constants"] = lim ? to_json(*lim, false) : json(nullptr);
    json gf = json::array();
    for (const auto& g : gadgets)
      if (!g.pass()) gf.push_back({{"m", g.m}, {"n", g.n}, {"shift", g.shift}, {"bracket", g.bracket}});
    j["gadgets"] = {{"checked", gadgets.size()}, {"failures", gf}};
    json kf = json::array();
    for (const auto& k : kbar)
      if (!k.pass) kf.push_back({{"m", k.m}, {"value", k.value}});
    j["kbar_chain"] = {{"checked", kbar.size()}, {"failures", kf}};
    j["all_pass"] = ok;
    print_json(j);
    return ok ? 0 : 1;
  }
  if (lim) {
    std::cout << "structure constants at q = 1 for λ = " << lim->lambda.str() << ": " << lim->entries.size() - lim->failures()
              << "/" << lim->entries.size() << " match, dimension " << lim->dim_quantum << " = " << lim->dim_classical << "\n";
    for (const auto& e : lim->entries)
      if (!e.pass) std::cout << "  mismatch s=" << e.s << " t=" << e.t << ": " << e.quantum_at_one << " vs " << e.classical << "\n";
    if (lim->character_ratio)
      std::cout << "character ratio: " << lim->character_ratio->clifford_route << " (Clifford dimensions), "
                << lim->character_ratio->case_route << " (case analysis)\n";
  }
  std::cout << "gadget identities, m, n in [" << -range << ", " << range << "]: " << gadgets.size() - gfail << "/"
            << gadgets.size() << " PASS\n";
  std::cout << "k̄^2 chain, m in [" << -range << ", " << range << "]: " << kbar.size() - kfail << "/" << kbar.size()
            << " PASS\n";
  return ok ? 0 : 1;
}

int cmd_example(bool as_json) {
  WorkedExampleReport r = worked_example();
  if (as_json) {
    print_json(to_json(r));
    return r.pass() ? 0 : 1;
  }
  auto mark = [](bool b) { return b ? "PASS" : "FAIL"; };
  std::cout << "λ = (4,2,1), t = q^2 + q^-2: Λ1 = " << r.space.lambda[0].str("t") << ", Λ2 = " << r.space.lambda[1].str("t")
            << ", Λ3 = " << r.space.lambda[2].str("t") << "\n";
  print_vec("w", r.w, "t");
  std::cout << "  Λ1 X^2 + Λ2 Y^2 + Λ3 Z^2 = 0: " << mark(r.w_solves) << "\n";
  std::cout << "  C1 = " << r.c1.str("t") << "\n  C1^2 = t mod t^2 - 2: " << mark(r.c1_residue) << "\n";
  std::cout << "  residue from the solver: " << r.c1_solver.str("t") << (r.c1_solver_matches ? " (same)" : " (differs)") << "\n";
  print_vec("w*", r.wstar, "t");
  print_vec("z", r.z, "t");
  std::cout << "  Gram identities of w, w*, z: " << mark(r.printed_gram) << "\n";
  std::cout << "  β(z, z) = " << r.printed.z_norms[0].str("t") << " = -1/4·t^2(t^2 - 2): " << mark(r.printed_zz) << "\n";
  std::cout << "constructed decomposition:\n";
  for (const auto& line : r.constructed.log) std::cout << "  " << line << "\n";
  print_decomposition(r.constructed);
  std::cout << "  Gram identities: " << mark(r.constructed_gram) << "\n";
  std::cout << "module " << r.module.dim_even << "|" << r.module.dim_odd << ":\n";
  for (std::size_t i = 0; i < r.module.T.size(); ++i) {
    std::cout << "  t̄" << i + 1 << " =\n";
    print_matrix(r.module.T[i], "t");
  }
  std::cout << "  t̄i t̄j + t̄j t̄i = 2 δij Λi: " << mark(r.constructed_module) << "\n";
  std::cout << "  module on the printed decomposition: " << mark(r.printed_module) << "\n";
  std::cout << "t̄i in the basis (w, w*, z):\n";
  for (const auto& c : r.coefficients)
    std::cout << "  t̄" << c.generator << " on " << c.basis << ": " << c.exact.str("t") << (c.equal ? "" : "  (printed value differs)") << "\n";
  std::cout << "deviations from the printed expansions: " << (r.deviations.empty() ? "none" : "") << "\n";
  for (const auto& d : r.deviations) std::cout << "  " << d << "\n";
  std::cout << (r.pass() ? "example PASS" : "example FAIL") << "\n";
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Clifford superalgebras: classification, Witt decompositions, module matrices, characters"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string weight, compare, var = "t";
  int n = 3;
  long range = 8;
  bool matrices = false, quantum = false, dimension_only = false, symmetric = false;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "exact JSON output"); };
  auto add_var = [&](CLI::App* c) {
    c->add_option("--var", var, "variable: t = q^2 + q^-2 or q")->check(CLI::IsMember({"t", "q"}));
  };

  auto* classify = app.add_subcommand("classify", "simple Cliff_q(λ)-modules");
  classify->add_option("--weight", weight, "comma-separated integers")->required();
  add_json(classify);

  auto* witt = app.add_subcommand("witt", "Witt decomposition and module matrices");
  witt->add_option("--weight", weight, "comma-separated integers")->required();
  witt->add_flag("--matrices", matrices, "print the matrices of t̄_i");
  add_var(witt);
  add_json(witt);

  auto* legendre = app.add_subcommand("legendre", "solve Λ1 X^2 + Λ2 Y^2 + Λ3 Z^2 = 0");
  legendre->add_option("--weight", weight, "three nonzero integers")->required();
  add_var(legendre);
  add_json(legendre);

  auto* character = app.add_subcommand("character", "generic character of V(λ)");
  character->add_option("--weight", weight, "q-dominant weight in P>=0")->required();
  character->add_flag("--quantum", quantum, "ch V^q(λ) instead of ch V(λ)");
  character->add_flag("--dimension-only", dimension_only, "print only the dimension");
  character->add_flag("--symmetric", symmetric, "print in the monomial symmetric basis");
  add_json(character);

  auto* delta = app.add_subcommand("delta", "δ(λ) symbol and central character comparison");
  delta->add_option("--weight", weight, "comma-separated integers")->required();
  delta->add_option("--compare", compare, "second weight");
  add_json(delta);

  auto* vqn = app.add_subcommand("verify-qn", "check the q(n) relation families on explicit matrices");
  vqn->add_option("--n", n, "rank n >= 2");
  add_json(vqn);

  auto* vlim = app.add_subcommand("verify-limit", "q -> 1 checks");
  vlim->add_option("--weight", weight, "weight for the structure-constant table");
  vlim->add_option("--range", range, "m, n range for the identity suites");
  add_json(vlim);

  auto* example = app.add_subcommand("example-4-11", "replay the λ = (4,2,1) example");
  example->alias("worked-example");
  add_json(example);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return cmd_classify(weight_arg(weight), as_json);
    if (*witt) return cmd_witt(weight_arg(weight), var, matrices, as_json);
    if (*legendre) return cmd_legendre(weight_arg(weight), var, as_json);
    if (*character) return cmd_character(weight_arg(weight), quantum, dimension_only, symmetric, as_json);
    if (*delta) return cmd_delta(weight_arg(weight), compare, as_json);
    if (*vqn) return cmd_verify_qn(n, as_json);
    if (*vlim) return cmd_verify_limit(weight, range, as_json);
    if (*example) return cmd_example(as_json);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedSplitting& e) {
    std::cerr << "unsupported splitting: " << e.what() << "\n";
    return 1;
  } catch (const NonExactDivision& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
