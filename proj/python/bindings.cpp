// Python bindings. Results cross the boundary as JSON text (the same
// encoding as the CLI's --json output) and are parsed on the Python side.

#include "qcliff/characters.hpp"
#include "qcliff/worked_example.hpp"
#include "qcliff/json_io.hpp"
#include "qcliff/legendre.hpp"
#include "qcliff/limit.hpp"
#include "qcliff/qn.hpp"
#include "qcliff/qnumbers.hpp"
#include "qcliff/witt.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qcliff;

namespace {

Weight to_weight(const std::vector<long>& v) {
  if (v.empty()) throw std::invalid_argument("empty weight");
  return Weight{v};
}

QuadSpace space_for(const Weight& w, const std::string& var) {
  if (var == "q") return QuadSpace::from_weight(w);
  if (var == "t") return QuadSpace::from_weight_t(w);
  throw std::invalid_argument("var must be 'q' or 't'");
}

std::string classify(const std::vector<long>& v) { return to_json(classify_simples(to_weight(v))).dump(); }

std::string witt(const std::vector<long>& v, const std::string& var, bool matrices) {
  Weight w = to_weight(v);
  if (w.n() > 8) throw std::invalid_argument("at most 8 entries");
  QuadSpace q = space_for(w, var);
  WittDecomposition wd;
  ModuleMatrices mm = build_module(q, &wd);
  json m = to_json(mm);
  if (!matrices) m.erase("T");
  json j = {{"lambda", to_json(w)},
            {"decomposition", to_json(wd)},
            {"gram_ok", witt_check(split_kernel(q).nondegenerate, wd)},
            {"module_check", to_json(verify_module_detail(mm, q))},
            {"module", m}};
  return j.dump();
}

std::string legendre(const std::vector<long>& v, const std::string& var) {
  Weight w = to_weight(v);
  if (w.n() != 3) throw std::invalid_argument("need exactly three entries");
  for (long x : w.v)
    if (x == 0) throw PreconditionError("legendre needs nonzero entries");
  QuadSpace q = space_for(w, var);
  auto s = var == "q" ? legendre_solve_q(q.lambda[0], q.lambda[1], q.lambda[2])
                      : legendre_solve(q.lambda[0], q.lambda[1], q.lambda[2]);
  json j = to_json(s, var);
  j["verified"] = legendre_check(q.lambda[0], q.lambda[1], q.lambda[2], s.X, s.Y, s.Z);
  return j.dump();
}

std::string character(const std::vector<long>& v, bool quantum) {
  Weight w = to_weight(v);
  CharacterPoly ch = quantum ? ch_vq(w) : sergeev_character(w);
  json j = {{"lambda", to_json(w)}, {"quantum", quantum}, {"dimension", ch.total().get_str()},
            {"highest_coefficient", ch.coeff(w.v).get_str()}, {"character", to_json(ch)},
            {"symmetric", ch.str_symmetric()}};
  return j.dump();
}

std::string delta(const std::vector<long>& v) { return to_json(delta_symbol(to_weight(v))).dump(); }

std::string verify_qn(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("n must lie in 2..12");
  return to_json(verify_presentation(n)).dump();
}

std::string limit(const std::vector<long>& v, bool entries) {
  return to_json(limit_structure_constants(to_weight(v)), entries).dump();
}

std::string example() { return to_json(worked_example()).dump(); }

}  // namespace

PYBIND11_MODULE(_qcliff, m) {
  m.doc() = "exact computations for quantum Clifford superalgebras";
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NonExactDivision>(m, "NonExactDivision", PyExc_ArithmeticError);
  py::register_exception<UnsupportedSplitting>(m, "UnsupportedSplitting", PyExc_RuntimeError);

  m.def("classify", &classify, py::arg("weight"));
  m.def("witt", &witt, py::arg("weight"), py::arg("var") = "t", py::arg("matrices") = false);
  m.def("legendre", &legendre, py::arg("weight"), py::arg("var") = "t");
  m.def("character", &character, py::arg("weight"), py::arg("quantum") = false);
  m.def("delta", &delta, py::arg("weight"));
  m.def("central_char_equal", [](const std::vector<long>& a, const std::vector<long>& b) {
    return central_char_equal(to_weight(a), to_weight(b));
  });
  m.def("verify_qn", &verify_qn, py::arg("n"));
  m.def("limit", &limit, py::arg("weight"), py::arg("entries") = false);
  m.def("worked_example", &example);
}
