#pragma once

#include <string>

#include <json.hpp>

#include "core/expr.hpp"

namespace gca {

// JSON schema:
//   Cyclo   {"M": int, "coeffs": [[index, numerator, denominator], ...]}
//           nonzero entries in ascending index order
//   Element {"N": int, "n": int, "terms": [{"exps": [...], "scalar": Cyclo}, ...]}
//           terms in lexicographic monomial order
//   State   {"N": int, "n": int, "terms": [{"a": [...], "scalar": Cyclo}, ...]}
// Output is byte-stable for a fixed input; round-trips are identity.
nlohmann::json cyclo_to_json(const Cyclo& c);
nlohmann::json element_to_json(const Element& x);
nlohmann::json state_to_json(const State& s);
nlohmann::json value_to_json(const Value& v);

Cyclo cyclo_from_json(const nlohmann::json& j);
Element element_from_json(const nlohmann::json& j);
State state_from_json(const nlohmann::json& j);
// Detects the payload kind from its keys; throws UsageError on schema violations.
Value value_from_json(const nlohmann::json& j);

std::string serialize(const Value& v);
Value deserialize(const std::string& text);

// Human-readable exact forms.  Scalars are rendered over the named constants
// q, zeta, omegaSqrt, sqrtN when a decomposition exists, with a raw zeta_M
// power fallback.
std::string print_scalar(const ScalarContext& ctx, const Cyclo& c);
std::string print_element(const ScalarContext& ctx, const Element& x);
std::string print_state(const ScalarContext& ctx, const State& s);
std::string print_value(const ScalarContext& ctx, const Value& v);

} // namespace gca
