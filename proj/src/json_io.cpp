#include "qcliff/json_io.hpp"

namespace qcliff {

namespace {

json level(const Tower* t, const Coeffs& c, std::size_t from, std::size_t len) {
  if (t->depth() == 0) {
    json coords = json::array();
    for (std::size_t k = 0; k < len; ++k) coords.push_back(c[from + k].get_str());
    return {{"zeta", t->conductor()}, {"coords", coords}};
  }
  const Tower* parent = t->parent().get();
  const std::size_t half = len / 2;
  return {{"radical", t->symbol()},
          {"radicand", level(parent, t->radicand(), 0, t->radicand().size())},
          {"coords", json::array({level(parent, c, from, half), level(parent, c, from + half, half)})}};
}

json matrix_json(const Matrix<RatFunc>& m, const std::string& var) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& e : r) row.push_back(to_json(e, var));
    rows.push_back(row);
  }
  return rows;
}

json vec_json(const Vec& v, const std::string& var) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e, var));
  return a;
}

}  // namespace

json to_json(const FieldElement& x) {
  if (x.is_rational()) return {{"rational", x.rational_value().get_str()}, {"text", x.str()}};
  json j = level(x.tower().get(), x.coords(), 0, x.coords().size());
  j["text"] = x.str();
  return j;
}

json to_json(const Poly& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"var", var}, {"coeffs", coeffs}, {"text", p.str(var)}};
}

json to_json(const RatFunc& f, const std::string& var) {
  return {{"num", to_json(f.num(), var)["coeffs"]}, {"den", to_json(f.den(), var)["coeffs"]}, {"text", f.str(var)}};
}

json to_json(const Weight& w) { return json(w.v); }

json to_json(const Classification& c) {
  return {{"lambda", to_json(c.lambda)},
          {"size_nonzero", c.size_nonzero},
          {"discriminant_square", c.discriminant_square},
          {"count", c.count},
          {"dim_even", c.dim_even},
          {"dim_odd", c.dim_odd},
          {"parity_invariant", c.parity_invariant},
          {"witt_index", c.witt_index}};
}

json to_json(const LegendreSolution& s, const std::string& var) {
  return {{"method", s.method}, {"X", to_json(s.X, var)}, {"Y", to_json(s.Y, var)}, {"Z", to_json(s.Z, var)}};
}

json to_json(const WittDecomposition& wd) {
  json w = json::array(), ws = json::array(), z = json::array(), zn = json::array();
  for (const auto& v : wd.w) w.push_back(vec_json(v, wd.var));
  for (const auto& v : wd.wstar) ws.push_back(vec_json(v, wd.var));
  for (const auto& v : wd.z) z.push_back(vec_json(v, wd.var));
  for (const auto& v : wd.z_norms) zn.push_back(to_json(v, wd.var));
  return {{"var", wd.var}, {"witt_index", wd.witt_index()}, {"w", w}, {"w_star", ws}, {"z", z}, {"z_norms", zn},
          {"log", wd.log}};
}

json to_json(const ModuleMatrices& mm) {
  json T = json::array();
  for (const auto& m : mm.T) T.push_back(matrix_json(m, mm.var));
  return {{"var", mm.var}, {"dim_even", mm.dim_even}, {"dim_odd", mm.dim_odd}, {"T", T}};
}

json to_json(const ModuleCheck& c) {
  return {{"relations", c.relations}, {"odd", c.odd}, {"faithful", c.faithful}, {"span_rank", c.span_rank},
          {"ok", c.ok()}, {"failure", c.failure}};
}

json to_json(const CharacterPoly& ch) {
  json terms = json::array();
  for (const auto& [e, c] : ch.terms()) {
    json ex = json::array();
    for (long x : e) {
      if (x % 2 == 0) ex.push_back(x / 2);
      else ex.push_back(std::to_string(x) + "/2");
    }
    terms.push_back({{"exponent", ex}, {"coeff", c.get_str()}});
  }
  return {{"n", ch.n()}, {"terms", terms}, {"text", ch.str()}};
}

json to_json(const DeltaSymbol& d) {
  json m = json::object();
  for (auto it = d.mult.rbegin(); it != d.mult.rend(); ++it) m[std::to_string(it->first)] = it->second;
  return {{"multiplicities", m}, {"text", d.str()}};
}

json to_json(const RelationReport& r) {
  json fam = json::array();
  for (const auto& [name, counts] : r.family_summary())
    fam.push_back({{"family", name}, {"passed", counts.first}, {"checked", counts.second}});
  json failures = json::array();
  for (const auto& res : r.results)
    if (!res.pass) failures.push_back({{"family", res.family}, {"indices", res.indices}, {"witness", res.witness}});
  return {{"n", r.n}, {"checks", r.results.size()}, {"all_pass", r.all_pass()}, {"families", fam}, {"failures", failures}};
}

json to_json(const LimitReport& r, bool include_entries) {
  json j = {{"lambda", to_json(r.lambda)},
            {"entries_checked", r.entries.size()},
            {"failures", r.failures()},
            {"dim_quantum", r.dim_quantum},
            {"dim_classical", r.dim_classical},
            {"all_pass", r.all_pass()}};
  if (r.character_ratio)
    j["character_ratio"] = {{"clifford_route", r.character_ratio->clifford_route},
                            {"case_route", r.character_ratio->case_route},
                            {"consistent", r.character_ratio->consistent()}};
  else
    j["character_ratio"] = nullptr;
  json entries = json::array();
  for (const auto& e : r.entries)
    if (include_entries || !e.pass)
      entries.push_back({{"s", e.s}, {"t", e.t}, {"pass", e.pass}, {"quantum_at_one", e.quantum_at_one}, {"classical", e.classical}});
  j["entries"] = entries;
  return j;
}

json to_json(const WorkedExampleReport& r) {
  json coeffs = json::array();
  for (const auto& c : r.coefficients)
    coeffs.push_back({{"generator", c.generator}, {"basis", c.basis}, {"printed", c.printed.str("t")},
                      {"exact", c.exact.str("t")}, {"equal", c.equal}});
  ModuleCheck mc = verify_module_detail(r.module, r.space);
  return {{"w", vec_json(r.w, "t")},
          {"C1", to_json(r.c1, "t")},
          {"C1_solver", to_json(r.c1_solver, "t")},
          {"checks",
           {{"w_solves", r.w_solves},
            {"c1_residue", r.c1_residue},
            {"printed_gram", r.printed_gram},
            {"printed_zz", r.printed_zz},
            {"constructed_gram", r.constructed_gram},
            {"constructed_module", r.constructed_module},
            {"printed_module", r.printed_module},
            {"c1_solver_matches", r.c1_solver_matches}}},
          {"printed_decomposition", to_json(r.printed)},
          {"constructed_decomposition", to_json(r.constructed)},
          {"module", to_json(r.module)},
          {"module_check", to_json(mc)},
          {"coefficients", coeffs},
          {"deviations", r.deviations},
          {"pass", r.pass()}};
}

}  // namespace qcliff
