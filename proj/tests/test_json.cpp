#include "doctest.h"
#include "support.hpp"

#include "qcliff/json_io.hpp"
#include "qcliff/qnumbers.hpp"

using namespace qcliff;

namespace {

// Decodes the nested field-element encoding into C, independently of the
// tower classes: radicals use the principal square root of the radicand.
qtest::cplx decode(const json& j) {
  if (j.contains("rational")) return static_cast<long double>(mpq_class(j["rational"].get<std::string>()).get_d());
  if (j.contains("zeta")) {
    const long double tau = 2.0L * std::acos(-1.0L);
    const long double N = j["zeta"].get<long double>();
    qtest::cplx s = 0;
    std::size_t k = 0;
    for (const auto& c : j["coords"]) {
      const long double a = tau * static_cast<long double>(k++) / N;
      s += static_cast<long double>(mpq_class(c.get<std::string>()).get_d()) * qtest::cplx(std::cos(a), std::sin(a));
    }
    return s;
  }
  const qtest::cplx r = std::sqrt(decode(j["radicand"]));
  return decode(j["coords"][0]) + decode(j["coords"][1]) * r;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("field elements decode to their numeric value") {
    std::mt19937 rng(99);
    auto q = qtest::quartic();
    for (const TowerPtr& t : {Tower::base(), q.tower, Tower::base(12)})
      for (int k = 0; k < 20; ++k) {
        FieldElement a = qtest::random_element(rng, t);
        json j = to_json(a);
        CHECK(j.contains("text"));
        CHECK(qtest::close(decode(j), qtest::numeric(a)));
      }
    CHECK(to_json(FieldElement(mpq_class(3, 4)))["rational"] == "3/4");
  }

  TEST_CASE("rational functions and polynomials") {
    json j = to_json(q_int(3), "q");
    CHECK(j["text"] == "q^2 + 1 + q^-2");
    CHECK(j["den"].size() == 3);
    json p = to_json(lambda_cap_t(4), "t");
    CHECK(p["var"] == "t");
    CHECK(p["coeffs"].size() == 4);
    CHECK(p["coeffs"][3]["rational"] == "1");
  }

  TEST_CASE("classification shape") {
    json j = to_json(classify_simples(Weight{{4, 2, 1}}));
    CHECK(j["lambda"] == json::array({4, 2, 1}));
    CHECK(j["size_nonzero"] == 3);
    CHECK(j["dim_even"] == 2);
    CHECK(j["dim_odd"] == 2);
    CHECK(j["parity_invariant"] == true);
    CHECK(j["witt_index"] == 1);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"lambda", "size_nonzero", "discriminant_square", "count", "dim_even",
                                           "dim_odd", "parity_invariant", "witt_index"});
  }

  TEST_CASE("decomposition and module") {
    QuadSpace q = QuadSpace::from_weight_t(Weight{{4, 2, 1}});
    WittDecomposition wd;
    auto mm = build_module(q, &wd);
    json d = to_json(wd);
    CHECK(d["witt_index"] == 1);
    CHECK(d["w"].size() == 1);
    CHECK(d["z"].size() == 1);
    json m = to_json(mm);
    CHECK(m["T"].size() == 3);
    CHECK(m["T"][0].size() == 4);
    CHECK(m["T"][0][0].size() == 4);
    json c = to_json(verify_module_detail(mm, q));
    CHECK(c["ok"] == true);
    CHECK(c["span_rank"] == 8);
  }

  TEST_CASE("characters and symbols") {
    json j = to_json(sergeev_character(Weight{{1, 0}}));
    CHECK(j["text"] == "2·x1 + 2·x2");
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "2");
    json d = to_json(delta_symbol(Weight{{2, 1, 0}}));
    CHECK(d["text"] == "δ2 + δ1");
    CHECK(d["multiplicities"]["2"] == 1);
    json h = to_json(weyl_denominator(2));
    CHECK(h["terms"][0]["exponent"][0].is_string());
  }

  TEST_CASE("reports") {
    json r = to_json(verify_presentation(2));
    CHECK(r["all_pass"] == true);
    CHECK(r["failures"].empty());
    json l = to_json(limit_structure_constants(Weight{{3, 1}}), false);
    CHECK(l["entries_checked"] == 16);
    CHECK(l["entries"].empty());
    CHECK(l["character_ratio"]["clifford_route"] == 2);
    json full = to_json(limit_structure_constants(Weight{{3, 1}}), true);
    CHECK(full["entries"].size() == 16);
    CHECK(to_json(limit_structure_constants(Weight{{1, 1}}), false)["character_ratio"].is_null());
  }

  TEST_CASE("output is deterministic") {
    auto a = to_json(worked_example()).dump();
    auto b = to_json(worked_example()).dump();
    CHECK(a == b);
  }
}
