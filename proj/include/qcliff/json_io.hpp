#pragma once

// Exact JSON output. A field element is nested by tower level:
//   base level:   {"zeta": N, "coords": ["a_0", ..., "a_{φ(N)-1}"]}   (Σ a_k ζ_N^k)
//   radical level: {"radical": "√2", "radicand": <element>, "coords": [<x0>, <x1>]}   (x0 + x1·radical)
// Rational values are written as {"rational": "p/q"}.
// Every object also carries a "text" field with the pretty-printed value.

#include "qcliff/characters.hpp"
#include "qcliff/worked_example.hpp"
#include "qcliff/legendre.hpp"
#include "qcliff/limit.hpp"
#include "qcliff/qn.hpp"
#include "qcliff/witt.hpp"

#include "json.hpp"

namespace qcliff {

using json = nlohmann::ordered_json;

json to_json(const FieldElement& x);
json to_json(const Poly& p, const std::string& var);
json to_json(const RatFunc& f, const std::string& var);
json to_json(const Weight& w);
json to_json(const Classification& c);
json to_json(const LegendreSolution& s, const std::string& var);
json to_json(const WittDecomposition& wd);
json to_json(const ModuleMatrices& mm);
json to_json(const ModuleCheck& c);
json to_json(const CharacterPoly& ch);
json to_json(const DeltaSymbol& d);
json to_json(const RelationReport& r);
json to_json(const LimitReport& r, bool include_entries);
json to_json(const WorkedExampleReport& r);

}  // namespace qcliff
